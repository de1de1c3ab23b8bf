#include "qcav/protocol.hpp"

#include <cmath>
#include <string>

#include "qcav/errors.hpp"
#include "qcav/hamiltonians.hpp"

namespace qcav {
namespace protocol {
namespace {

constexpr double kNormTol = 1e-10;
constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_normalized(const QubitAmplitudes& q) {
    const double n2 = std::norm(q.alpha) + std::norm(q.beta);
    if (std::abs(n2 - 1.0) > kNormTol) {
        throw NotNormalized("qubit amplitudes have squared norm " +
                            std::to_string(n2));
    }
}

}  // namespace

StateVector initial_state(const QubitAmplitudes& q, FockCutoff cutoff) {
    check_normalized(q);
    const StateVector qubit = fockspace::qubit_state(q.alpha, q.beta);
    const StateVector vac = fockspace::fock_state(0, cutoff);
    return fockspace::tensor(qubit, vac);
}

StateVector target_state(const QubitAmplitudes& q, const SystemParams& p) {
    check_normalized(q);
    const DerivedCouplings c = physical::couplings(p);
    if (c.eta <= 0.0) {
        throw ZeroCoupling("swap target undefined without exchange coupling");
    }
    const double phase = p.omega * M_PI / (4.0 * c.eta);
    StateVector cav = fockspace::fock_state(0, p.cutoff);
    cav.amp[0] = q.alpha * std::exp(Complex(0.0, phase));
    cav.amp[1] = -q.beta * std::exp(Complex(0.0, -phase));
    const StateVector qubit = fockspace::qubit_state(1.0, 0.0);
    return fockspace::tensor(qubit, cav);
}

double transfer_probability_analytic(const SystemParams& p, double t) {
    const DerivedCouplings c = physical::couplings(p);
    if (c.eta <= 0.0) {
        throw ZeroCoupling("transfer probability undefined without coupling");
    }
    const double s = std::sin(c.eta * t);
    const double phase = p.omega * t - p.omega * M_PI / (2.0 * c.eta);
    const double v = 0.25 + 0.5 * std::cos(phase) * s + 0.25 * s * s;
    return v < 0.0 ? 0.0 : v;
}

TransferCurves transfer_curves(const SystemParams& p,
                               const std::vector<double>& times) {
    const QubitAmplitudes equal{kInvSqrt2, kInvSqrt2};
    const StateVector psi0 = initial_state(equal, p.cutoff);
    const StateVector target = target_state(equal, p);
    const evolution::Evolver prop(hamiltonians::build_jc(p));

    TransferCurves out;
    out.times = times;
    out.analytic.reserve(times.size());
    out.numeric.reserve(times.size());
    const std::vector<StateVector> states = prop.evolve_series(psi0, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        out.analytic.push_back(transfer_probability_analytic(p, times[i]));
        out.numeric.push_back(std::norm(fockspace::overlap(target, states[i])));
    }
    return out;
}

}  // namespace protocol
}  // namespace qcav
