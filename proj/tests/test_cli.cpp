#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qcav/cli.hpp"
#include "qcav/errors.hpp"
#include "qcav/physical.hpp"

using namespace qcav;
using cli::RunConfig;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Value of "key=..." from the machine half of the params report.
std::string machine_value(const std::string& report, const std::string& key) {
    const auto at = report.find("\n" + key + "=");
    REQUIRE(at != std::string::npos);
    const auto begin = at + key.size() + 2;
    const auto end = report.find('\n', begin);
    return report.substr(begin, end - begin);
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    const auto lines = split(text, '\n');
    REQUIRE(!lines.empty());
    csv.header = split(lines[0], ',');
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<double> row;
        for (const std::string& cell : split(lines[i], ',')) {
            row.push_back(std::stod(cell));
        }
        REQUIRE(row.size() == csv.header.size());
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

int run_cli(const std::vector<std::string>& args, std::string* stdout_text,
            std::string* stderr_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (stdout_text) *stdout_text = out.str();
    if (stderr_text) *stderr_text = err.str();
    return code;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("numeric values accept pi expressions") {
    RunConfig cfg;
    cli::apply_assignment(cfg, "phi_e", "pi/2");
    CHECK(cfg.phi_e == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
    cli::apply_assignment(cfg, "phi_e", "3pi/4");
    CHECK(cfg.phi_e == doctest::Approx(3.0 * M_PI / 4.0).epsilon(1e-15));
    cli::apply_assignment(cfg, "phi_e", "-pi");
    CHECK(cfg.phi_e == doctest::Approx(-M_PI).epsilon(1e-15));
    cli::apply_assignment(cfg, "phi_e", "0.5pi");
    CHECK(cfg.phi_e == doctest::Approx(0.5 * M_PI).epsilon(1e-15));
    cli::apply_assignment(cfg, "t_end", " 2.5 ");
    CHECK(cfg.t_end == 2.5);
    cli::apply_assignment(cfg, "alphas", "0,1.5,pi");
    REQUIRE(cfg.alphas.size() == 3);
    CHECK(cfg.alphas[2] == doctest::Approx(M_PI).epsilon(1e-15));
}

TEST_CASE("malformed assignments are rejected") {
    RunConfig cfg;
    CHECK_THROWS_AS(cli::apply_assignment(cfg, "phi_e", "abc"), ConfigError);
    CHECK_THROWS_AS(cli::apply_assignment(cfg, "phi_e", "1.5x"), ConfigError);
    CHECK_THROWS_AS(cli::apply_assignment(cfg, "phi_e", "pi/0"), ConfigError);
    CHECK_THROWS_AS(cli::apply_assignment(cfg, "cutoff", "2.5"), ConfigError);
    CHECK_THROWS_AS(cli::apply_assignment(cfg, "no_such_key", "1"),
                    ConfigError);
    CHECK_THROWS_AS(cli::apply_assignment(cfg, "scale", "bench"), ConfigError);
    CHECK_THROWS_AS(cli::apply_assignment(cfg, "alphas", ""), ConfigError);
}

TEST_CASE("config file layering and override order") {
    const std::string path = "cli_test_config.txt";
    {
        std::ofstream f(path);
        f << "# reference desk setup\n"
             "scale = desk\n"
             "phi_e = pi/4   # trailing comment\n"
             "n_points = 11\n"
             "\n";
    }

    RunConfig cfg;
    cli::apply_config_file(cfg, path);
    CHECK(cfg.scale == "desk");
    CHECK(cfg.phi_e == doctest::Approx(M_PI / 4.0).epsilon(1e-15));
    CHECK(cfg.n_points == 11);
    CHECK(cfg.frequency == 30e9);  // untouched default

    // --set lands after the file
    cli::apply_assignment(cfg, "phi_e", "0.3");
    CHECK(cfg.phi_e == 0.3);

    {
        std::ofstream f(path);
        f << "phi_e 0.3\n";
    }
    RunConfig bad;
    CHECK_THROWS_AS(cli::apply_config_file(bad, path), ConfigError);
    CHECK_THROWS_AS(cli::apply_config_file(bad, "no_such_file.cfg"),
                    ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("desk scale synthesizes the advertised couplings") {
    RunConfig cfg;
    cfg.scale = "desk";

    cfg.mode = "decoherence";
    SystemParams p = cli::resolve_params(cfg);  // phi_e defaults to pi/2
    DerivedCouplings c = physical::couplings(p);
    CHECK(c.eta == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(std::abs(c.delta) < 1e-12);
    CHECK(p.cutoff.n_max == 60);
    CHECK(c.qubit_splitting == doctest::Approx(p.omega).epsilon(1e-9));

    p = cli::resolve_params(cfg, 0.0);
    c = physical::couplings(p);
    CHECK(c.eta == 0.0);
    CHECK(c.delta == doctest::Approx(0.02).epsilon(1e-12));

    cfg.mode = "storage";
    p = cli::resolve_params(cfg);
    c = physical::couplings(p);
    CHECK(c.eta == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(p.cutoff.n_max == 30);
}

TEST_CASE("scale=paper derives the flux phase from the geometry") {
    RunConfig cfg;
    cfg.mode = "params";
    const SystemParams p = cli::resolve_params(cfg);
    CHECK(p.omega == doctest::Approx(2.0 * M_PI * 30e9).epsilon(1e-12));
    CHECK(p.phi_0 == doctest::Approx(1.14e-5).epsilon(0.02));
    CHECK(physical::couplings(p).eta == doctest::Approx(5.89e5).epsilon(0.02));
}

TEST_CASE("default time grids") {
    RunConfig cfg;
    cfg.scale = "desk";

    cfg.mode = "storage";
    SystemParams p = cli::resolve_params(cfg);
    auto ts = cli::resolve_times(cfg, p);
    REQUIRE(ts.size() == 2000);
    const double tstar = physical::storage_time(physical::couplings(p).eta);
    CHECK(ts[1000] == doctest::Approx(tstar).epsilon(1e-12));

    cfg.mode = "decoherence";
    p = cli::resolve_params(cfg, 0.0);
    ts = cli::resolve_times(cfg, p);
    CHECK(ts.back() ==
          doctest::Approx(2.0 * M_PI / (std::sqrt(1.08) - std::sqrt(0.92)))
              .epsilon(1e-9));

    p = cli::resolve_params(cfg);  // phi_e = pi/2: no squeezing split
    ts = cli::resolve_times(cfg, p);
    CHECK(ts.back() == doctest::Approx(4.0 * M_PI / p.omega).epsilon(1e-12));

    cfg.t_start = 1.0;
    cfg.t_end = 2.0;
    cfg.n_points = 5;
    ts = cli::resolve_times(cfg, p);
    REQUIRE(ts.size() == 5);
    CHECK(ts.front() == 1.0);
    CHECK(ts.back() == 2.0);

    cfg.t_end = 0.5;
    CHECK_THROWS_AS(cli::resolve_times(cfg, p), ConfigError);
    cfg.t_end = 2.0;
    cfg.n_points = 1;
    CHECK_THROWS_AS(cli::resolve_times(cfg, p), ConfigError);
}

TEST_CASE("params report carries the derived device numbers") {
    std::string text;
    REQUIRE(run_cli({"params"}, &text) == 0);
    CHECK(std::stod(machine_value(text, "field_amplitude_T")) ==
          doctest::Approx(7.52e-11).epsilon(0.02));
    CHECK(std::stod(machine_value(text, "phi_0")) ==
          doctest::Approx(1.14e-5).epsilon(0.02));
    CHECK(std::stod(machine_value(text, "n_g_star")) ==
          doctest::Approx(0.6266).epsilon(0.005));
    CHECK(std::stod(machine_value(text, "storage_time_s")) ==
          doctest::Approx(2.67e-6).epsilon(0.03));

    REQUIRE(run_cli({"params", "--set", "ej_uev=0"}, &text) == 0);
    CHECK(machine_value(text, "storage_time_s") == "unavailable");
    CHECK(std::stod(machine_value(text, "eta_rad_per_s")) == 0.0);
}

TEST_CASE("storage CSV hits unit transfer at the swap row") {
    std::string text;
    REQUIRE(run_cli({"storage", "--set", "scale=desk"}, &text) == 0);
    const Csv csv = parse_csv(text);
    REQUIRE(csv.header ==
            std::vector<std::string>{"t", "P_analytic", "P_numeric",
                                     "abs_diff"});
    REQUIRE(csv.rows.size() == 2000);
    CHECK(csv.rows[1000][1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(csv.rows[1000][2] == doctest::Approx(1.0).epsilon(1e-6));
    double worst = 0.0;
    for (const auto& row : csv.rows) {
        CHECK(row[1] >= 0.0);
        CHECK(row[1] <= 1.0 + 1e-9);
        CHECK(row[2] >= 0.0);
        CHECK(row[2] <= 1.0 + 1e-9);
        worst = std::max(worst, row[3]);
    }
    CHECK(worst <= 1e-4);
}

TEST_CASE("decoherence CSV pairs the closed form with the reference") {
    std::string text;
    REQUIRE(run_cli({"decoherence", "--set", "scale=desk", "--set",
                     "n_points=400"},
                    &text) == 0);
    const Csv csv = parse_csv(text);
    REQUIRE(csv.header.size() == 9);
    CHECK(csv.header[1] == "D_analytic_a0");
    CHECK(csv.header[2] == "D_numeric_a0");
    CHECK(csv.header[7] == "D_analytic_a3");
    REQUIRE(csv.rows.size() == 400);

    for (std::size_t j = 1; j < 9; ++j) {
        CHECK(csv.rows[0][j] == doctest::Approx(1.0).epsilon(1e-9));
    }
    // phi_e defaults to pi/2: the factor is amplitude independent there
    for (const auto& row : csv.rows) {
        for (std::size_t j = 3; j < 9; j += 2) {
            CHECK(std::abs(row[j] - row[1]) < 1e-11);
        }
        for (std::size_t j = 1; j < 9; j += 2) {
            CHECK(std::abs(row[j + 1] - row[j]) < 1e-4);
        }
    }
}

TEST_CASE("decoherence collapse deepens with amplitude at zero flux bias") {
    std::string text;
    REQUIRE(run_cli({"decoherence", "--set", "scale=desk", "--set",
                     "phi_e=0", "--set", "n_points=400"},
                    &text) == 0);
    const Csv csv = parse_csv(text);
    double min_a1 = 2.0, min_a3 = 2.0;
    for (const auto& row : csv.rows) {
        min_a1 = std::min(min_a1, row[3]);
        min_a3 = std::min(min_a3, row[7]);
    }
    CHECK(min_a3 < min_a1);
    CHECK(min_a1 < 1.0);
}

TEST_CASE("sweep at device scale keeps every grid point coherent") {
    std::string text;
    REQUIRE(run_cli({"sweep"}, &text) == 0);
    const Csv csv = parse_csv(text);
    REQUIRE(csv.header ==
            std::vector<std::string>{"phi_e", "alpha", "min_D", "t_at_min",
                                     "optimal"});
    REQUIRE(csv.rows.size() == 8);
    for (const auto& row : csv.rows) {
        CHECK(row[2] >= 1.0 - 1e-6);
        CHECK(row[4] == 1.0);
    }
}

TEST_CASE("sweep at desk scale singles out the squeezing-free vacuum") {
    const std::vector<std::string> args{"sweep", "--set", "scale=desk",
                                        "--set", "n_points=500"};
    std::string text;
    REQUIRE(run_cli(args, &text) == 0);
    const Csv csv = parse_csv(text);
    REQUIRE(csv.rows.size() == 8);

    // rows 0..3: phi_e = 0 with alpha 0..3; rows 4..7: phi_e = pi/2
    CHECK(csv.rows[0][4] == 1.0);
    for (std::size_t i = 1; i < 8; ++i) CHECK(csv.rows[i][4] == 0.0);
    CHECK(csv.rows[3][2] < csv.rows[1][2]);
    const double disp_floor = std::exp(-8.0 * 0.09);
    for (std::size_t i = 4; i < 8; ++i) {
        CHECK(csv.rows[i][2] == doctest::Approx(disp_floor).epsilon(5e-3));
    }

    // a single worker must produce byte-identical output
    std::vector<std::string> serial = args;
    serial.push_back("--set");
    serial.push_back("threads=1");
    std::string text_serial;
    REQUIRE(run_cli(serial, &text_serial) == 0);
    CHECK(text == text_serial);
}

TEST_CASE("repeated runs are byte identical") {
    const std::vector<std::string> args{"storage", "--set", "scale=desk",
                                        "--set", "n_points=300"};
    std::string a, b;
    REQUIRE(run_cli(args, &a) == 0);
    REQUIRE(run_cli(args, &b) == 0);
    CHECK(a == b);
    CHECK(!a.empty());
    CHECK(a.back() == '\n');
}

TEST_CASE("--out writes the same bytes to a file") {
    const std::string path = "cli_test_out.csv";
    std::string direct, via_file;
    REQUIRE(run_cli({"storage", "--set", "scale=desk", "--set",
                     "n_points=50"},
                    &direct) == 0);
    REQUIRE(run_cli({"storage", "--set", "scale=desk", "--set", "n_points=50",
                     "--out", path},
                    &via_file) == 0);
    CHECK(via_file.empty());  // everything goes to the file
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == direct);
    std::remove(path.c_str());

    std::string err;
    CHECK(run_cli({"params", "--out", "missing_dir/x.txt"}, nullptr, &err) ==
          2);
    CHECK(err.find("cannot open output file") != std::string::npos);
}

TEST_CASE("exit codes separate config from numeric failures") {
    std::string err;

    // mirror spacing beyond the stability range
    CHECK(run_cli({"params", "--set", "length=6e-3"}, nullptr, &err) == 2);

    // cavity basis too small for the requested coherent amplitude
    CHECK(run_cli({"decoherence", "--set", "scale=desk", "--set", "cutoff=20",
                   "--set", "alphas=3", "--set", "n_points=50"},
                  nullptr, &err) == 3);
    CHECK(err.find("error:") != std::string::npos);

    CHECK(run_cli({"sweep", "--set", "sweep_phi_e="}, nullptr, &err) == 2);
    CHECK(run_cli({"params", "--set", "phi_e"}, nullptr, &err) == 2);
    CHECK(run_cli({"nonsense"}, nullptr, &err) == 2);
    CHECK(run_cli({}, nullptr, &err) == 2);

    std::string help;
    CHECK(run_cli({"--help"}, &help) == 0);
    CHECK(help.find("storage") != std::string::npos);
}

}  // TEST_SUITE
