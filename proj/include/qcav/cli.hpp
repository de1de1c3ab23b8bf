#ifndef QCAV_CLI_HPP
#define QCAV_CLI_HPP

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "qcav/physical.hpp"

namespace qcav {
namespace cli {

// Fully resolved run description. Defaults reproduce the reference device
// (30 GHz cavity, R = 2.55 mm, L = 5 mm, E_C = 122 ueV, E_J = 34 ueV);
// a config file and then --set overrides are layered on top, in that order.
// Fields holding a negative sentinel are derived at resolve time.
struct RunConfig {
    std::string mode;
    std::string scale = "paper";  // paper | desk

    // device inputs
    double radius = 2.55e-3;      // m
    double length = 5.0e-3;       // m
    double frequency = 30e9;      // Hz
    double ec_uev = 122.0;        // ueV
    double ej_uev = 34.0;         // ueV
    double phi_e =
        std::numeric_limits<double>::quiet_NaN();  // rad; NaN -> pi/2
    double n_g = -1.0;            // sentinel -> resonance value
    double phi_0 = -1.0;          // sentinel -> derived from geometry
    double omega = -1.0;          // rad/s; sentinel -> 2 pi frequency
    int cutoff = -1;              // sentinel -> mode/scale default

    // time grid
    double t_start = 0.0;
    double t_end = -1.0;          // sentinel -> mode default
    int n_points = 2000;

    // decoherence / sweep axes
    std::vector<double> alphas{0.0, 1.0, 2.0, 3.0};
    std::vector<double> sweep_phi_e;  // empty -> {0, pi/2}
    std::vector<double> sweep_alpha;  // empty -> {0, 1, 2, 3}
    bool sweep_phi_e_set = false;
    bool sweep_alpha_set = false;

    std::string out;              // empty -> stdout
    int threads = 0;              // 0 -> hardware concurrency
};

// Applies one `key=value` assignment; unknown keys and malformed values
// throw ConfigError. Numeric values may use `pi` expressions such as
// "pi/2" or "3pi/4"; list values are comma-separated.
void apply_assignment(RunConfig& cfg, const std::string& key,
                      const std::string& value);

// Reads a `key = value` file ('#' starts a comment) into cfg.
void apply_config_file(RunConfig& cfg, const std::string& path);

// Turns the run description into simulator parameters. scale=paper derives
// phi_0 from the cavity geometry; scale=desk replaces the device energies
// with synthetic ones (eta/omega = 0.3, delta/omega = 0.02 for decoherence
// and sweep, eta/omega = 0.02 for storage, E_C = 1e6 omega) so that
// collapse, revival and swap dynamics are visible on a few thousand grid
// points. Desk scale ignores ec_uev and ej_uev.
SystemParams resolve_params(const RunConfig& cfg);
SystemParams resolve_params(const RunConfig& cfg, double phi_e);

// Default time grid for the mode: storage uses 2000 steps of t*/1000 so the
// swap time lands exactly on a row; decoherence and sweep cover one revival
// period (or two cavity periods when the squeezing coupling is negligible).
std::vector<double> resolve_times(const RunConfig& cfg, const SystemParams& p);

int cmd_params(const RunConfig& cfg, std::ostream& os);
int cmd_storage(const RunConfig& cfg, std::ostream& os);
int cmd_decoherence(const RunConfig& cfg, std::ostream& os);
int cmd_sweep(const RunConfig& cfg, std::ostream& os);

// Entry points. Exit status: 0 success, 2 configuration error,
// 3 numerical-validity error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace cli
}  // namespace qcav

#endif
