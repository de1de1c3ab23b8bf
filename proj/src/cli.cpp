#include "qcav/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qcav/constants.hpp"
#include "qcav/errors.hpp"
#include "qcav/gaussian.hpp"
#include "qcav/oracle.hpp"
#include "qcav/protocol.hpp"

namespace qcav {
namespace cli {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_plain(const std::string& tok) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw ConfigError("cannot parse number '" + tok + "'");
    }
    return v;
}

// Accepts plain decimals plus the convenience forms "pi", "-pi", "pi/2",
// "3pi/4", "0.5pi".
double parse_number(const std::string& raw) {
    const std::string tok = trim(raw);
    if (tok.empty()) throw ConfigError("empty numeric value");
    const auto at = tok.find("pi");
    if (at == std::string::npos) return parse_plain(tok);

    std::string pre = tok.substr(0, at);
    const std::string post = tok.substr(at + 2);
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    double coef = 1.0;
    if (pre == "-") {
        coef = -1.0;
    } else if (!pre.empty()) {
        coef = parse_plain(pre);
    }
    double div = 1.0;
    if (!post.empty()) {
        if (post[0] != '/') {
            throw ConfigError("cannot parse number '" + tok + "'");
        }
        div = parse_plain(post.substr(1));
        if (div == 0.0) throw ConfigError("division by zero in '" + tok + "'");
    }
    return coef * M_PI / div;
}

std::vector<double> parse_list(const std::string& raw) {
    std::vector<double> out;
    const std::string s = trim(raw);
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = s.find(',', pos);
        const std::string tok = s.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_number(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int parse_int(const std::string& raw) {
    const double v = parse_number(raw);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError("expected an integer, got '" + trim(raw) + "'");
    }
    return i;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& os) {
    if (cfg.out.empty()) {
        os << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + cfg.out + "'");
    f << text;
}

}  // namespace

void apply_assignment(RunConfig& cfg, const std::string& key,
                      const std::string& value) {
    const std::string k = trim(key);
    if (k == "scale") {
        const std::string v = trim(value);
        if (v != "paper" && v != "desk") {
            throw ConfigError("scale must be 'paper' or 'desk', got '" + v +
                              "'");
        }
        cfg.scale = v;
    } else if (k == "radius") {
        cfg.radius = parse_number(value);
    } else if (k == "length") {
        cfg.length = parse_number(value);
    } else if (k == "frequency") {
        cfg.frequency = parse_number(value);
    } else if (k == "ec_uev") {
        cfg.ec_uev = parse_number(value);
    } else if (k == "ej_uev") {
        cfg.ej_uev = parse_number(value);
    } else if (k == "phi_e") {
        cfg.phi_e = parse_number(value);
    } else if (k == "n_g") {
        cfg.n_g = parse_number(value);
    } else if (k == "phi_0") {
        cfg.phi_0 = parse_number(value);
    } else if (k == "omega") {
        cfg.omega = parse_number(value);
    } else if (k == "cutoff") {
        cfg.cutoff = parse_int(value);
    } else if (k == "t_start") {
        cfg.t_start = parse_number(value);
    } else if (k == "t_end") {
        cfg.t_end = parse_number(value);
    } else if (k == "n_points") {
        cfg.n_points = parse_int(value);
    } else if (k == "alphas") {
        cfg.alphas = parse_list(value);
        if (cfg.alphas.empty()) throw ConfigError("alphas must be non-empty");
    } else if (k == "sweep_phi_e") {
        cfg.sweep_phi_e = parse_list(value);
        cfg.sweep_phi_e_set = true;
    } else if (k == "sweep_alpha") {
        cfg.sweep_alpha = parse_list(value);
        cfg.sweep_alpha_set = true;
    } else if (k == "threads") {
        cfg.threads = parse_int(value);
    } else {
        throw ConfigError("unknown config key '" + k + "'");
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        }
        apply_assignment(cfg, body.substr(0, eq), body.substr(eq + 1));
    }
}

SystemParams resolve_params(const RunConfig& cfg) {
    return resolve_params(cfg,
                          std::isnan(cfg.phi_e) ? M_PI / 2.0 : cfg.phi_e);
}

SystemParams resolve_params(const RunConfig& cfg, double phi_e) {
    SystemParams p;
    p.phi_e = phi_e;
    p.ec = physical::ev_to_rad(cfg.ec_uev * 1e-6);

    if (cfg.scale == "paper") {
        p.omega = cfg.omega > 0.0 ? cfg.omega : 2.0 * M_PI * cfg.frequency;
        p.ej = physical::ev_to_rad(cfg.ej_uev * 1e-6);
        if (cfg.phi_0 >= 0.0) {
            p.phi_0 = cfg.phi_0;
        } else {
            const CavityGeometry g{
                cfg.radius, cfg.length,
                constants::speed_of_light / cfg.frequency};
            const double b =
                physical::field_amplitude(p.omega, physical::mode_volume(g));
            p.phi_0 = physical::flux_phase(physical::default_loop_area, b);
        }
        p.cutoff = FockCutoff{cfg.cutoff > 0 ? cfg.cutoff : 30};
    } else {
        // Desk scale: unit cavity frequency and an exaggerated flux phase,
        // with E_J back-solved so that the couplings reach visible targets
        // without overshooting either one. E_C is remapped as well: at the
        // physical value the resonance offset n_g* - 1/2 ~ 1e-13 would drown
        // in the rounding of n_g near 1/2 and detune the synthetic qubit.
        p.omega = cfg.omega > 0.0 ? cfg.omega : 1.0;
        p.ec = 1e6 * p.omega;
        p.phi_0 = cfg.phi_0 >= 0.0 ? cfg.phi_0 : 5e-4;
        const bool storage = cfg.mode == "storage";
        const double eta_target = (storage ? 0.02 : 0.3) * p.omega;
        const double delta_target = (storage ? 0.0 : 0.02) * p.omega;
        const double s = std::abs(std::sin(phi_e));
        const double c = std::abs(std::cos(phi_e));
        double ej = std::numeric_limits<double>::infinity();
        if (s > 1e-12 && eta_target > 0.0) {
            ej = std::min(ej, eta_target / (p.phi_0 * s));
        }
        if (c > 1e-12 && delta_target > 0.0) {
            ej = std::min(ej, 2.0 * delta_target / (p.phi_0 * p.phi_0 * c));
        }
        p.ej = std::isfinite(ej) ? ej : 0.0;
        p.cutoff = FockCutoff{cfg.cutoff > 0 ? cfg.cutoff : (storage ? 30 : 60)};
    }

    p.n_g = cfg.n_g >= 0.0 ? cfg.n_g
                           : physical::resonance_gate_charge(p.ec, p.omega);
    physical::validate(p);
    return p;
}

std::vector<double> resolve_times(const RunConfig& cfg,
                                  const SystemParams& p) {
    if (cfg.n_points < 2) throw ConfigError("n_points must be >= 2");
    std::vector<double> ts(static_cast<std::size_t>(cfg.n_points));

    if (cfg.t_end >= 0.0) {
        if (cfg.t_end <= cfg.t_start) {
            throw ConfigError("t_end must exceed t_start");
        }
        const double dt = (cfg.t_end - cfg.t_start) / (cfg.n_points - 1);
        for (int i = 0; i < cfg.n_points; ++i) ts[i] = cfg.t_start + i * dt;
        return ts;
    }

    if (cfg.mode == "storage") {
        // Step t*/1000 so that (with the default 2000 points) one row falls
        // exactly on the swap time and the grid covers just under two swaps.
        const double tstar =
            physical::storage_time(physical::couplings(p).eta);
        const double dt = tstar / 1000.0;
        for (int i = 0; i < cfg.n_points; ++i) ts[i] = i * dt;
        return ts;
    }

    const DerivedCouplings c = physical::couplings(p);
    double horizon;
    if (std::abs(c.delta) / p.omega > 1e-9) {
        const double om0 = gaussian::branch_frequencies(0, p).omega_k;
        const double om1 = gaussian::branch_frequencies(1, p).omega_k;
        horizon = 2.0 * M_PI / std::abs(om0 - om1);
    } else {
        horizon = 2.0 * (2.0 * M_PI / p.omega);
    }
    const double dt = horizon / (cfg.n_points - 1);
    for (int i = 0; i < cfg.n_points; ++i) ts[i] = i * dt;
    return ts;
}

int cmd_params(const RunConfig& cfg, std::ostream& os) {
    const SystemParams p = resolve_params(cfg);
    const DerivedCouplings c = physical::couplings(p);
    const CavityGeometry g{cfg.radius, cfg.length,
                           constants::speed_of_light / cfg.frequency};
    const double vol = physical::mode_volume(g);
    const double field = physical::field_amplitude(p.omega, vol);
    const double ng_star = physical::resonance_gate_charge(p.ec, p.omega);
    const bool has_swap = c.eta > 0.0;
    const double tstar = has_swap ? physical::storage_time(c.eta) : 0.0;

    std::ostringstream ss;
    ss << "mode volume            V     = " << fmt_short(vol) << " m^3\n"
       << "vacuum field amplitude B     = " << fmt_short(field) << " T\n"
       << "flux phase amplitude   phi_0 = " << fmt_short(p.phi_0) << "\n"
       << "exchange coupling      eta   = " << fmt_short(c.eta) << " rad/s\n"
       << "squeezing coupling     delta = " << fmt_short(c.delta) << " rad/s\n"
       << "resonance gate charge  n_g*  = " << fmt_short(ng_star) << "\n";
    if (has_swap) {
        ss << "swap duration          t*    = " << fmt_short(tstar) << " s\n";
    } else {
        ss << "swap duration          t*    = unavailable (eta = 0)\n";
    }
    ss << "---\n"
       << "mode_volume_m3=" << fmt(vol) << "\n"
       << "field_amplitude_T=" << fmt(field) << "\n"
       << "phi_0=" << fmt(p.phi_0) << "\n"
       << "eta_rad_per_s=" << fmt(c.eta) << "\n"
       << "delta_rad_per_s=" << fmt(c.delta) << "\n"
       << "n_g_star=" << fmt(ng_star) << "\n"
       << "storage_time_s=" << (has_swap ? fmt(tstar) : "unavailable") << "\n";
    emit(cfg, ss.str(), os);
    return 0;
}

int cmd_storage(const RunConfig& cfg, std::ostream& os) {
    const SystemParams p = resolve_params(cfg);
    const std::vector<double> times = resolve_times(cfg, p);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const TraceSeries numeric =
        oracle::numeric_transfer(p, {inv_sqrt2, inv_sqrt2}, times);

    std::string csv = "t,P_analytic,P_numeric,abs_diff\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double pa = protocol::transfer_probability_analytic(p, times[i]);
        const double pn = numeric.values[i];
        csv += fmt(times[i]);
        csv += ',';
        csv += fmt(pa);
        csv += ',';
        csv += fmt(pn);
        csv += ',';
        csv += fmt(std::abs(pa - pn));
        csv += '\n';
    }
    emit(cfg, csv, os);
    return 0;
}

int cmd_decoherence(const RunConfig& cfg, std::ostream& os) {
    const SystemParams p = resolve_params(cfg);
    const std::vector<double> times = resolve_times(cfg, p);

    std::vector<std::vector<double>> analytic;
    std::vector<TraceSeries> numeric;
    for (double a : cfg.alphas) {
        std::vector<double> col;
        col.reserve(times.size());
        for (double t : times) {
            col.push_back(gaussian::decoherence_factor(p, a, t));
        }
        analytic.push_back(std::move(col));
        numeric.push_back(oracle::numeric_decoherence(p, a, times));
    }

    std::string csv = "t";
    for (double a : cfg.alphas) {
        csv += ",D_analytic_a" + fmt_short(a) + ",D_numeric_a" + fmt_short(a);
    }
    csv += '\n';
    for (std::size_t i = 0; i < times.size(); ++i) {
        csv += fmt(times[i]);
        for (std::size_t j = 0; j < cfg.alphas.size(); ++j) {
            csv += ',';
            csv += fmt(analytic[j][i]);
            csv += ',';
            csv += fmt(numeric[j].values[i]);
        }
        csv += '\n';
    }
    emit(cfg, csv, os);
    return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& os) {
    std::vector<double> phis =
        cfg.sweep_phi_e_set ? cfg.sweep_phi_e
                            : std::vector<double>{0.0, M_PI / 2.0};
    std::vector<double> alphas = cfg.sweep_alpha_set
                                     ? cfg.sweep_alpha
                                     : std::vector<double>{0.0, 1.0, 2.0, 3.0};
    if (phis.empty() || alphas.empty()) {
        throw ConfigError("sweep axes must be non-empty");
    }

    struct Row {
        double phi_e = 0.0;
        double alpha = 0.0;
        double min_d = 0.0;
        double t_at_min = 0.0;
    };
    const std::size_t n = phis.size() * alphas.size();
    std::vector<Row> rows(n);

    // Grid points are independent; workers pull indices and write into a
    // pre-sized result array, so the emitted order never depends on thread
    // scheduling.
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        try {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                const double phi = phis[i / alphas.size()];
                const double alpha = alphas[i % alphas.size()];
                const SystemParams p = resolve_params(cfg, phi);
                const std::vector<double> times = resolve_times(cfg, p);
                double best = std::numeric_limits<double>::infinity();
                double at = 0.0;
                for (double t : times) {
                    const double d = gaussian::decoherence_factor(p, alpha, t);
                    if (d < best) {
                        best = d;
                        at = t;
                    }
                }
                rows[i] = {phi, alpha, best, at};
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            next.store(n);
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const std::size_t nthreads =
        std::min<std::size_t>(cfg.threads > 0 ? cfg.threads : hw, n);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i + 1 < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    double best_min = -std::numeric_limits<double>::infinity();
    for (const Row& r : rows) best_min = std::max(best_min, r.min_d);

    std::string csv = "phi_e,alpha,min_D,t_at_min,optimal\n";
    for (const Row& r : rows) {
        csv += fmt(r.phi_e);
        csv += ',';
        csv += fmt(r.alpha);
        csv += ',';
        csv += fmt(r.min_d);
        csv += ',';
        csv += fmt(r.t_at_min);
        csv += ',';
        csv += (r.min_d >= best_min - 1e-9) ? '1' : '0';
        csv += '\n';
    }
    emit(cfg, csv, os);
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"charge qubit / microwave cavity simulator"};
    app.require_subcommand(1);
    std::string config_path;
    std::string out_path;
    std::vector<std::string> sets;
    const std::pair<const char*, const char*> modes[] = {
        {"params", "derive device parameters from geometry and energies"},
        {"storage", "qubit -> cavity swap curves (CSV)"},
        {"decoherence", "engineered decoherence factor curves (CSV)"},
        {"sweep", "min-over-time coherence across (phi_e, alpha) (CSV)"},
    };
    for (const auto& m : modes) {
        CLI::App* sub = app.add_subcommand(m.first, m.second);
        sub->add_option("--config", config_path,
                        "key = value file ('#' comments)");
        sub->add_option("--set", sets, "override, e.g. --set phi_e=pi/2");
        sub->add_option("--out", out_path, "write output to file");
    }

    std::vector<const char*> argv;
    argv.push_back("qcav");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        for (const auto& m : modes) {
            if (app.got_subcommand(m.first)) cfg.mode = m.first;
        }
        if (!config_path.empty()) apply_config_file(cfg, config_path);
        for (const std::string& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("--set expects key=value, got '" + s + "'");
            }
            apply_assignment(cfg, s.substr(0, eq), s.substr(eq + 1));
        }
        if (!out_path.empty()) cfg.out = out_path;

        if (cfg.mode == "params") return cmd_params(cfg, out);
        if (cfg.mode == "storage") return cmd_storage(cfg, out);
        if (cfg.mode == "decoherence") return cmd_decoherence(cfg, out);
        return cmd_sweep(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::config ? 2 : 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace cli
}  // namespace qcav
