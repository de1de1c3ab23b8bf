#ifndef QCAV_PROTOCOL_HPP
#define QCAV_PROTOCOL_HPP

#include <vector>

#include "qcav/evolution.hpp"
#include "qcav/fockspace.hpp"
#include "qcav/physical.hpp"

namespace qcav {
namespace protocol {

// Swap duration t* = pi/(2 eta) together with the analytic and numerically
// evolved transfer probabilities sampled on a common grid.
struct TransferCurves {
    std::vector<double> times;
    std::vector<double> analytic;
    std::vector<double> numeric;
};

// (alpha|0>_q + beta|1>_q) (x) |0>_c. Throws NotNormalized when the qubit
// amplitudes fail |alpha|^2 + |beta|^2 = 1 within 1e-10.
StateVector initial_state(const QubitAmplitudes& q, FockCutoff cutoff);

// End state of a completed swap:
//   |0>_q (x) (alpha e^{+i omega pi/(4 eta)} |0>_c
//              - beta e^{-i omega pi/(4 eta)} |1>_c).
// The phase convention matches the resonant exchange Hamiltonian used by
// hamiltonians::build_jc at t = pi/(2 eta). Throws ZeroCoupling when eta <= 0.
StateVector target_state(const QubitAmplitudes& q, const SystemParams& p);

// Overlap probability |<target|psi(t)>|^2 in closed form for the
// equal-superposition preparation alpha = beta = 1/sqrt(2):
//   P(t) = 1/4 + 1/2 cos(omega t - omega pi/(2 eta)) sin(eta t)
//        + 1/4 sin^2(eta t).
// Round-off below zero is clamped to 0.
double transfer_probability_analytic(const SystemParams& p, double t);

// Closed-form P(t) next to the brute-force route (build the exchange
// Hamiltonian, evolve the equal-superposition preparation, overlap with
// target_state) on the given grid.
TransferCurves transfer_curves(const SystemParams& p,
                               const std::vector<double>& times);

}  // namespace protocol
}  // namespace qcav

#endif
