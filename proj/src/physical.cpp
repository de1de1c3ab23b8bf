#include "qcav/physical.hpp"

#include <cmath>

#include "qcav/constants.hpp"

namespace qcav::physical {

namespace k = qcav::constants;

double ev_to_rad(double energy_ev) {
    return energy_ev * k::elementary_charge / k::hbar;
}

double mode_volume(const CavityGeometry& g) {
    if (g.wavelength <= 0.0)
        throw InvalidParams("mode_volume: wavelength must be positive");
    if (g.length <= 0.0 || g.length >= 2.0 * g.mirror_radius)
        throw UnstableResonator("mode_volume: need 0 < L < 2R, got L = " +
                                std::to_string(g.length));
    double waist_sq = (g.wavelength / (2.0 * M_PI)) *
                      std::sqrt(g.length * (2.0 * g.mirror_radius - g.length));
    return (M_PI / 4.0) * waist_sq * g.length;
}

double field_amplitude(double omega, double volume) {
    if (omega <= 0.0 || volume <= 0.0)
        throw InvalidParams("field_amplitude: omega and volume must be positive");
    return std::sqrt(k::hbar * omega /
                     (k::vacuum_permittivity * volume * k::speed_of_light * k::speed_of_light));
}

double flux_phase(double loop_area, double b_field) {
    if (loop_area < 0.0)
        throw InvalidParams("flux_phase: loop area must be nonnegative");
    return M_PI * loop_area * b_field / k::flux_quantum;
}

DerivedCouplings couplings(const SystemParams& p) {
    DerivedCouplings c;
    c.eta = p.phi_0 * p.ej * std::sin(p.phi_e);
    c.delta = 0.5 * p.phi_0 * p.phi_0 * p.ej * std::cos(p.phi_e);
    c.qubit_splitting = 8.0 * p.ec * (p.n_g - 0.5);
    return c;
}

double resonance_gate_charge(double ec, double omega) {
    if (ec <= 0.0)
        throw InvalidParams("resonance_gate_charge: E_C must be positive");
    if (omega < 0.0)
        throw InvalidParams("resonance_gate_charge: omega must be nonnegative");
    double n_g = 0.5 + omega / (8.0 * ec);
    if (n_g > 1.0)
        throw OutOfRange("resonance_gate_charge: solution " + std::to_string(n_g) +
                         " leaves the two-level window");
    return n_g;
}

double storage_time(double eta) {
    if (eta <= 0.0)
        throw ZeroCoupling("storage_time: requires eta > 0");
    return M_PI / (2.0 * eta);
}

std::vector<std::string> validate(const SystemParams& p) {
    if (p.omega <= 0.0)
        throw InvalidParams("params: omega must be positive");
    if (p.ec <= 0.0 || p.ej < 0.0)
        throw InvalidParams("params: energies must be positive");
    if (p.ej > 0.0 && p.ec < 3.0 * p.ej)
        throw InvalidParams("params: charge regime requires E_C >= 3 E_J");
    if (p.n_g < 0.0 || p.n_g > 1.0)
        throw InvalidParams("params: n_g outside [0, 1]");
    if (p.phi_0 < 0.0)
        throw InvalidParams("params: phi_0 must be nonnegative");
    if (p.cutoff.n_max < 1)
        throw InvalidParams("params: cutoff must retain at least two levels");

    std::vector<std::string> warnings;
    double spread = p.phi_0 * std::sqrt(double(p.cutoff.n_max));
    if (spread > 0.1)
        warnings.push_back("phi_0 sqrt(n_max) = " + std::to_string(spread) +
                           " strains the second-order expansion");
    return warnings;
}

SystemParams reference_device() {
    double freq = 30e9;  // Hz
    CavityGeometry g{2.55e-3, 5.0e-3, k::speed_of_light / freq};

    SystemParams p;
    p.omega = 2.0 * M_PI * freq;
    p.ec = ev_to_rad(122e-6);
    p.ej = ev_to_rad(34e-6);
    p.phi_0 = flux_phase(default_loop_area, field_amplitude(p.omega, mode_volume(g)));
    p.phi_e = M_PI / 2.0;
    p.n_g = resonance_gate_charge(p.ec, p.omega);
    p.cutoff = FockCutoff{30};
    return p;
}

}  // namespace qcav::physical
