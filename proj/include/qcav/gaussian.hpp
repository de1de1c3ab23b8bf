#ifndef QCAV_GAUSSIAN_HPP
#define QCAV_GAUSSIAN_HPP

#include <vector>

#include "qcav/evolution.hpp"
#include "qcav/fockspace.hpp"
#include "qcav/physical.hpp"

// Closed-form description of the cavity field conditioned on a qubit branch.
//
// During a measurement segment the generator splits into two branch
// Hamiltonians labelled by k in {0, 1}, where k = 0 is the sigma_x = +1
// branch. Each branch evolves an initial coherent state |alpha> into a
// displaced squeezed state parameterized by (beta, mu, nu, theta); the
// magnitude of the branch-state overlap is the coherence retained by the
// qubit. Everything here is analytic; the brute-force counterpart lives in
// the oracle namespace and shares no code with this one.
namespace qcav {
namespace gaussian {

// Shifted oscillation frequency of branch k and its ratio to the bare
// cavity frequency:
//   Omega_k = sqrt(omega^2 + (-1)^k 4 delta omega),  n_k = Omega_k / omega.
// Real only while omega > 4|delta|.
struct BranchFrequencies {
    double omega_k;
    double n_k;
};

// Throws SqueezingUnstable when the requested branch frequency turns
// imaginary, and OutOfRange for k outside {0, 1}.
BranchFrequencies branch_frequencies(int k, const SystemParams& p);

// Branch-k Gaussian parameters at time t for initial coherent amplitude
// alpha, writing s = (-1)^k and Om = Omega_k:
//   mu_k    = cos(Om t) + i ((omega + 2 s delta) / Om) sin(Om t)
//   nu_k    = i (2 s delta / Om) sin(Om t)
//   beta_k  = alpha + (s eta / Om) [sin(Om t) + i (omega / Om)(1 - cos(Om t))]
//   theta_k = (eta^2 omega / Om^2 + s E_J cos(phi_e)) t
// The pair (mu, nu) satisfies |mu|^2 - |nu|^2 = 1 identically.
SqueezedParams branch_params(int k, const SystemParams& p, Complex alpha,
                             double t);

// <d1|d0> for two displaced squeezed states in (beta, mu, nu, theta) form.
// With xi = nu/mu and kappa = beta/mu:
//   <d1|d0> = e^{i(theta0 - theta1)} N1 N0 (1 - xi1* xi0)^{-1/2}
//             exp[(2 kappa1* kappa0 + xi0 kappa1*^2 + xi1* kappa0^2)
//                 / (2 (1 - xi1* xi0))]
//   N = |mu|^{-1/2} exp(-|beta|^2/2 - Re(nu* beta^2 / mu)/2)
// Re(1 - xi1* xi0) > 0 whenever both pairs are Bogoliubov-valid, so the
// principal square root is the branch that is continuous in t and equals +1
// at t = 0. Throws InvalidBogoliubov on malformed input and
// DegenerateDenominator when |mu1* mu0 - nu1* nu0| underflows.
Complex squeezed_overlap(const SqueezedParams& p1, const SqueezedParams& p0);

// D(t) = |<d1(t)|d0(t)>|, assembled from branch_params and squeezed_overlap.
// Equals 1 at t = 0 and stays within [0, 1] up to round-off.
double decoherence_factor(const SystemParams& p, Complex alpha, double t);

// Special case cos(phi_e) = 0, where both branches only displace (delta = 0):
//   D(t) = exp[-(8 eta^2 / omega^2) sin^2(omega t / 2)],
// independent of alpha and periodic with period 2 pi / omega. Throws
// PreconditionViolated away from the pure-displacement operating point.
double displacement_factor(const SystemParams& p, double t);

// One D(t) series per requested alpha on a shared time grid. Labels are
// "alpha=<value>".
std::vector<TraceSeries> decoherence_curves(const SystemParams& p,
                                            const std::vector<Complex>& alphas,
                                            const std::vector<double>& times);

}  // namespace gaussian
}  // namespace qcav

#endif
