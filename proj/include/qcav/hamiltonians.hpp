#ifndef QCAV_HAMILTONIANS_HPP
#define QCAV_HAMILTONIANS_HPP

#include <string>
#include <vector>

#include "qcav/fockspace.hpp"
#include "qcav/physical.hpp"

// Hamiltonian builders. Everything is returned in angular-rate units
// (entries are energies divided by hbar, rad/s).
namespace qcav::hamiltonians {

// cos(phi_e + phi_0 Q) with Q = -i(a - a^dag), evaluated exactly on the
// truncated space by diagonalizing Q and mapping its eigenvalues.
Operator cavity_cosine(double phi_e, double phi_0, FockCutoff cutoff);

// Flux-coupled two-level system plus one cavity mode:
//   H = 4 E_C (n_g - 1/2) sz - E_J cos(phi_e + phi_f) sx + omega a^dag a,
// with phi_f = -i phi_0 (a - a^dag).
Operator build_full(const SystemParams& p);

// Resonant exchange model on the composite space,
//   H = (omega/2) sz' + i eta (a sp' - a^dag sm') + omega a^dag a,
// written in the convention where |1>_q carries the qubit excitation
// (sz' = |1><1| - |0><0|, sp' = |1><0|). The interaction sign is fixed so a
// qubit excitation transfers to the cavity with amplitude -sin(eta t) on
// |0>_q|1>_c. Appends a warning when the qubit splitting misses the cavity
// frequency by more than 1e-6 relative.
Operator build_jc(const SystemParams& p, std::vector<std::string>* warnings = nullptr);

// build_full at the symmetry point n_g = 1/2, where the sz term vanishes and
// the Hamiltonian commutes with sx (x) 1. Throws GateChargeNotTuned.
Operator build_measurement(const SystemParams& p);

// Cavity-only Hamiltonian for one sx branch of the measurement model:
//   H_k = -(-1)^k E_J cos(phi_e + phi_f) + omega a^dag a,
// k = 0 for the sx = +1 branch.
Operator build_branch(const SystemParams& p, int k);

// Second-order expansion of the measurement Hamiltonian in phi_0:
//   H = -[E_J cos(phi_e) + delta (aa + a^dag a^dag - a a^dag - a^dag a)
//        + i eta (a - a^dag)] sx + omega a^dag a.
Operator build_expanded(const SystemParams& p);

}  // namespace qcav::hamiltonians

#endif
