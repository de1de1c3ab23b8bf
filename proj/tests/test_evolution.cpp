#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qcav/errors.hpp"
#include "qcav/evolution.hpp"
#include "qcav/fockspace.hpp"
#include "qcav/hamiltonians.hpp"
#include "qcav/physical.hpp"

using namespace qcav;
using evolution::Evolver;

namespace {

Operator random_hermitian(std::mt19937& rng, int dim, Space space) {
    std::normal_distribution<double> gauss;
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    return {(g + g.adjoint()).eval() / 2.0, space};
}

SystemParams swap_params() {
    SystemParams p;
    p.ec = 500.0;
    p.ej = 2000.0;
    p.omega = 50.0;
    p.phi_e = M_PI / 2.0;
    p.phi_0 = 5e-4;  // eta = 1
    p.n_g = 0.5 + p.omega / (8.0 * p.ec);
    p.cutoff = FockCutoff{30};
    return p;
}

}  // namespace

TEST_SUITE("evolution") {

TEST_CASE("propagator at t=0 is the identity and stays unitary") {
    std::mt19937 rng(3);
    const Operator h = random_hermitian(rng, 14, Space::cavity);
    const Evolver ev(h);

    const Matrix u0 = ev.propagator(0.0).mat;
    CHECK((u0 - Matrix::Identity(14, 14)).cwiseAbs().maxCoeff() < 1e-12);

    const Matrix u = ev.propagator(0.37).mat;
    CHECK((u.adjoint() * u - Matrix::Identity(14, 14)).cwiseAbs().maxCoeff() <
          1e-10);
}

TEST_CASE("propagators compose as a one-parameter group") {
    std::mt19937 rng(17);
    const Operator h = random_hermitian(rng, 20, Space::cavity);
    const Evolver ev(h);
    const Matrix lhs = ev.propagator(0.8).mat * ev.propagator(1.9).mat;
    const Matrix rhs = ev.propagator(0.8 + 1.9).mat;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("free field rotates coherent states") {
    const FockCutoff cut{24};
    const double omega = 1.7;
    const Operator h{(omega * fockspace::number_op(cut).mat).eval(),
                     Space::cavity};
    const Evolver ev(h);

    const Complex alpha{1.2, 0.4};
    const double t = 0.9;
    const StateVector evolved =
        ev.apply(fockspace::coherent_state(alpha, cut), t);
    const StateVector rotated = fockspace::coherent_state(
        alpha * std::exp(Complex(0.0, -omega * t)), cut);
    const double fid = std::norm(fockspace::overlap(rotated, evolved));
    CHECK(1.0 - fid < 1e-8);
}

TEST_CASE("series evolution preserves norm and energy") {
    std::mt19937 rng(29);
    const Operator h = random_hermitian(rng, 16, Space::cavity);
    StateVector psi0{Vector(16), Space::cavity};
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 16; ++i) psi0.amp[i] = Complex(gauss(rng), gauss(rng));
    psi0.amp.normalize();

    std::vector<double> times;
    for (int i = 0; i < 50; ++i) times.push_back(0.13 * i);
    const Evolver ev(h);
    const auto states = ev.evolve_series(psi0, times);

    const double e0 = std::real(psi0.amp.dot(h.mat * psi0.amp));
    for (const StateVector& s : states) {
        CHECK(std::abs(s.norm() - 1.0) < 1e-9);
        CHECK(std::abs(std::real(s.amp.dot(h.mat * s.amp)) - e0) < 1e-9);
    }

    const StateVector single = ev.apply(psi0, times[7]);
    CHECK((single.amp - states[7].amp).cwiseAbs().maxCoeff() < 1e-12);

    const StateVector via_u{(ev.propagator(times[7]).mat * psi0.amp).eval(),
                            Space::cavity};
    CHECK((single.amp - via_u.amp).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("non-Hermitian generators are rejected") {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 1) = 1.0;  // missing the conjugate entry
    CHECK_THROWS_AS(Evolver(Operator{m, Space::cavity}), NotHermitian);
}

TEST_CASE("dimension mismatches are rejected") {
    std::mt19937 rng(31);
    const Evolver ev(random_hermitian(rng, 8, Space::cavity));
    CHECK_THROWS_AS(ev.apply(fockspace::fock_state(0, FockCutoff{9}), 1.0),
                    SpaceMismatch);
}

TEST_CASE("a time series costs one decomposition") {
    std::mt19937 rng(41);
    const Operator h = random_hermitian(rng, 12, Space::cavity);
    StateVector psi0 = fockspace::fock_state(0, FockCutoff{11});

    evolution::reset_counters();
    const Evolver ev(h);
    std::vector<double> times(1000);
    for (int i = 0; i < 1000; ++i) times[i] = 0.01 * i;
    ev.evolve_series(psi0, times);

    const auto counts = evolution::counters();
    CHECK(counts.decompositions == 1);
    CHECK(counts.applications == 1000);
}

TEST_CASE("reduced states of a product preparation") {
    const Complex a{0.6, 0.0};
    const Complex b{0.0, 0.8};
    const StateVector qs = fockspace::qubit_state(a, b);
    const StateVector prod =
        fockspace::tensor(qs, fockspace::fock_state(0, FockCutoff{5}));

    const DensityMatrix rq = evolution::reduced_qubit(prod);
    CHECK(std::abs(rq.mat(0, 0).real() - std::norm(a)) < 1e-12);
    CHECK(std::abs(rq.mat(1, 1).real() - std::norm(b)) < 1e-12);
    CHECK(std::abs(rq.mat(0, 1) - a * std::conj(b)) < 1e-12);

    const DensityMatrix rc = evolution::reduced_cavity(prod);
    CHECK(std::abs(rc.mat(0, 0).real() - 1.0) < 1e-12);
    CHECK(rc.mat.cwiseAbs().sum() - 1.0 < 1e-12);
}

TEST_CASE("swap dynamics disentangle the cavity only at special times") {
    const SystemParams p = swap_params();
    const double eta = physical::couplings(p).eta;
    REQUIRE(std::abs(eta - 1.0) < 1e-12);

    const double inv = 1.0 / std::sqrt(2.0);
    const StateVector psi0 = fockspace::tensor(
        fockspace::qubit_state(inv, inv), fockspace::fock_state(0, p.cutoff));
    const Evolver ev(hamiltonians::build_jc(p));

    // halfway through the swap the cavity is entangled with the qubit
    const double tq = M_PI / (4.0 * eta);
    const DensityMatrix mid = evolution::reduced_cavity(ev.apply(psi0, tq));
    const double purity_mid = (mid.mat * mid.mat).trace().real();
    CHECK(purity_mid < 0.95);

    // at the swap time it is pure again with the stored populations
    const double ts = M_PI / (2.0 * eta);
    const DensityMatrix fin = evolution::reduced_cavity(ev.apply(psi0, ts));
    const double purity_fin = (fin.mat * fin.mat).trace().real();
    CHECK(std::abs(purity_fin - 1.0) < 1e-8);
    CHECK(std::abs(fin.mat(0, 0).real() - 0.5) < 1e-8);
    CHECK(std::abs(fin.mat(1, 1).real() - 0.5) < 1e-8);

    const DensityMatrix start = evolution::reduced_cavity(psi0);
    const double purity_start = (start.mat * start.mat).trace().real();
    CHECK(std::abs(purity_start - 1.0) < 1e-12);
}

TEST_CASE("swap dynamics never leave the one-excitation span") {
    const SystemParams p = swap_params();
    const double inv = 1.0 / std::sqrt(2.0);
    const StateVector psi0 = fockspace::tensor(
        fockspace::qubit_state(inv, inv), fockspace::fock_state(0, p.cutoff));
    const Evolver ev(hamiltonians::build_jc(p));
    const int d = p.cutoff.dim();

    for (int i = 0; i <= 40; ++i) {
        const StateVector s = ev.apply(psi0, 0.11 * i);
        double outside = 0.0;
        for (int idx = 0; idx < 2 * d; ++idx) {
            if (idx == 0 || idx == 1 || idx == d) continue;
            outside += std::norm(s.amp[idx]);
        }
        CHECK(outside < 1e-10);
    }
}

}  // TEST_SUITE
