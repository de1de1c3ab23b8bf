#ifndef QCAV_ORACLE_HPP
#define QCAV_ORACLE_HPP

#include <vector>

#include "qcav/evolution.hpp"
#include "qcav/fockspace.hpp"
#include "qcav/physical.hpp"

// Brute-force reference results computed straight from matrices in the
// truncated Fock basis. Nothing here touches the closed-form layers
// (gaussian, protocol), so agreement between the two routes is evidence,
// not circularity. Every evolution is monitored for truncation leakage:
// if the top two Fock levels ever hold more than 1e-8 of the population,
// the run is rejected with TruncationError instead of returning numbers
// that merely look plausible.
namespace qcav {
namespace oracle {

// Which branch generator drives the reference evolution.
//   cosine:    full operator cosine of the flux phase (no expansion at all).
//   quadratic: second-order expansion, restricted to one qubit branch.
// Comparing an analytic result against both separates cosine-truncation
// error from errors in the formula under test.
enum class BranchModel { cosine, quadratic };

// |<alpha| exp(+i H_1 t) exp(-i H_0 t) |alpha>| on the given grid.
TraceSeries numeric_decoherence(const SystemParams& p, Complex alpha,
                                const std::vector<double>& times,
                                BranchModel model = BranchModel::cosine);

// |<target| exp(-i H t) |initial>|^2 for the resonant-exchange generator,
// where initial = (alpha|0> + beta|1>) (x) |0>_c and the target is the
// evolved state at the swap time pi/(2 eta). The closed-form target never
// enters; the swap claim is checked end to end.
TraceSeries numeric_transfer(const SystemParams& p, const QubitAmplitudes& q,
                             const std::vector<double>& times);

// Largest entry of |H_exact - H_second_order| over the lower-half Fock
// block, with the gate charge pinned to the measurement point. The upper
// half is excluded because the operator cosine is only trustworthy away
// from the truncation edge.
double expansion_error(const SystemParams& p);

}  // namespace oracle
}  // namespace qcav

#endif
