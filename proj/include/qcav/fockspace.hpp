#ifndef QCAV_FOCKSPACE_HPP
#define QCAV_FOCKSPACE_HPP

#include <complex>

#include <Eigen/Dense>

#include "qcav/errors.hpp"

namespace qcav {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Which Hilbert space a state or operator lives on. The composite space is
// ordered qubit-major: index = q * (n_max + 1) + n.
enum class Space { qubit, cavity, qubit_cavity };

// Truncated oscillator basis |0..n_max|.
struct FockCutoff {
    int n_max = 0;
    int dim() const { return n_max + 1; }
};

struct StateVector {
    Vector amp;
    Space space = Space::cavity;

    int dim() const { return static_cast<int>(amp.size()); }
    double norm() const { return amp.norm(); }
    StateVector normalized() const;
};

struct Operator {
    Matrix mat;
    Space space = Space::cavity;

    int dim() const { return static_cast<int>(mat.rows()); }
    Operator adjoint() const { return {mat.adjoint(), space}; }
};

struct DensityMatrix {
    Matrix mat;
    Space space = Space::cavity;

    int dim() const { return static_cast<int>(mat.rows()); }
    double trace_real() const { return mat.trace().real(); }
};

// Eigenstate data for the transformed mode mu a - nu a^dag, eigenvalue beta,
// with |mu|^2 - |nu|^2 = 1, carrying a global phase theta.
struct SqueezedParams {
    Complex beta{0.0, 0.0};
    Complex mu{1.0, 0.0};
    Complex nu{0.0, 0.0};
    double theta = 0.0;
};

// Qubit superposition alpha |0> + beta |1>.
struct QubitAmplitudes {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};
};

namespace fockspace {

// Ladder operators on the truncated space, <n-1|a|n> = sqrt(n).
Operator annihilation(FockCutoff cutoff);
Operator creation(FockCutoff cutoff);
Operator number_op(FockCutoff cutoff);
Operator identity(FockCutoff cutoff);

// Charge-basis qubit operators: sz = |0><0| - |1><1|, sx = |0><1| + |1><0|,
// sp raises toward the sz = +1 state.
struct QubitOps {
    Operator sz, sx, sp, sm, id;
};
QubitOps qubit_ops();

StateVector fock_state(int n, FockCutoff cutoff);
StateVector qubit_state(Complex c0, Complex c1);

// |alpha> truncated at the cutoff. Throws TruncationError when the discarded
// Poisson mass exceeds 1e-6.
StateVector coherent_state(Complex alpha, FockCutoff cutoff);

// Eigenstate of mu a - nu a^dag built by the three-term recursion
// mu sqrt(n+1) c_{n+1} - nu sqrt(n) c_{n-1} = beta c_n and normalized, with
// <0|state> real positive. theta is not applied here; it rides along in the
// params for overlap bookkeeping. Throws InvalidBogoliubov, TruncationError.
StateVector squeezed_state(const SqueezedParams& p, FockCutoff cutoff);

// <x|y>. Throws SpaceMismatch when the two states live on different spaces.
Complex overlap(const StateVector& x, const StateVector& y);

Operator tensor(const Operator& qubit_op, const Operator& cavity_op);
StateVector tensor(const StateVector& qubit_part, const StateVector& cavity_part);

DensityMatrix density(const StateVector& psi);

// Trace out the complement of `keep` from a qubit (x) cavity density matrix.
DensityMatrix partial_trace(const DensityMatrix& rho, Space keep);

}  // namespace fockspace
}  // namespace qcav

#endif
