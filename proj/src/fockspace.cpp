#include "qcav/fockspace.hpp"

#include <cmath>
#include <string>

namespace qcav {

namespace {

constexpr double kTruncationTol = 1e-6;
constexpr double kBogoliubovTol = 1e-9;

void require_space(const StateVector& s, Space want, const char* who) {
    if (s.space != want)
        throw SpaceMismatch(std::string(who) + ": state on wrong space");
}

// Unnormalized recursion amplitudes for the mu a - nu a^dag eigenstate.
// Rescales on the fly so strong squeezing cannot overflow.
Vector squeezed_recursion(const SqueezedParams& p, int dim) {
    Vector c(dim);
    c[0] = 1.0;
    if (dim > 1) c[1] = p.beta / p.mu;
    for (int n = 1; n + 1 < dim; ++n) {
        c[n + 1] = (p.beta * c[n] + p.nu * std::sqrt(double(n)) * c[n - 1]) /
                   (p.mu * std::sqrt(double(n + 1)));
        if (std::abs(c[n + 1]) > 1e120) c.head(n + 2) /= 1e120;
    }
    return c;
}

}  // namespace

StateVector StateVector::normalized() const {
    double n = norm();
    if (n < 1e-300) throw NotNormalized("normalized: zero vector");
    return {amp / n, space};
}

namespace fockspace {

Operator annihilation(FockCutoff cutoff) {
    int d = cutoff.dim();
    Matrix a = Matrix::Zero(d, d);
    for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(double(n));
    return {a, Space::cavity};
}

Operator creation(FockCutoff cutoff) { return annihilation(cutoff).adjoint(); }

Operator number_op(FockCutoff cutoff) {
    int d = cutoff.dim();
    Matrix n = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) n(k, k) = double(k);
    return {n, Space::cavity};
}

Operator identity(FockCutoff cutoff) {
    return {Matrix::Identity(cutoff.dim(), cutoff.dim()), Space::cavity};
}

QubitOps qubit_ops() {
    Matrix sz(2, 2), sx(2, 2), sp(2, 2), sm(2, 2);
    sz << 1, 0, 0, -1;
    sx << 0, 1, 1, 0;
    sp << 0, 1, 0, 0;  // |0><1|
    sm << 0, 0, 1, 0;  // |1><0|
    return {{sz, Space::qubit},
            {sx, Space::qubit},
            {sp, Space::qubit},
            {sm, Space::qubit},
            {Matrix::Identity(2, 2), Space::qubit}};
}

StateVector fock_state(int n, FockCutoff cutoff) {
    if (n < 0 || n > cutoff.n_max)
        throw OutOfRange("fock_state: level outside cutoff");
    Vector v = Vector::Zero(cutoff.dim());
    v[n] = 1.0;
    return {v, Space::cavity};
}

StateVector qubit_state(Complex c0, Complex c1) {
    Vector v(2);
    v << c0, c1;
    return {v, Space::qubit};
}

StateVector coherent_state(Complex alpha, FockCutoff cutoff) {
    int d = cutoff.dim();
    Vector c(d);
    c[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < d; ++n) c[n] = c[n - 1] * alpha / std::sqrt(double(n));
    double kept = c.squaredNorm();
    if (1.0 - kept > kTruncationTol)
        throw TruncationError("coherent_state: discarded mass " +
                              std::to_string(1.0 - kept) + " at n_max " +
                              std::to_string(cutoff.n_max));
    return {c, Space::cavity};
}

StateVector squeezed_state(const SqueezedParams& p, FockCutoff cutoff) {
    double gap = std::norm(p.mu) - std::norm(p.nu) - 1.0;
    if (std::abs(gap) > kBogoliubovTol)
        throw InvalidBogoliubov("squeezed_state: |mu|^2-|nu|^2 = " +
                                std::to_string(1.0 + gap));
    // Synthesize past the cutoff to measure what truncation would discard.
    int d = cutoff.dim();
    int d_ext = d + std::max(16, d / 2);
    Vector ext = squeezed_recursion(p, d_ext);
    double total = ext.squaredNorm();
    double tail = ext.tail(d_ext - d).squaredNorm();
    if (tail / total > kTruncationTol)
        throw TruncationError("squeezed_state: discarded mass " +
                              std::to_string(tail / total) + " at n_max " +
                              std::to_string(cutoff.n_max));
    Vector c = ext.head(d);
    return {c / c.norm(), Space::cavity};
}

Complex overlap(const StateVector& x, const StateVector& y) {
    if (x.space != y.space || x.dim() != y.dim())
        throw SpaceMismatch("overlap: mismatched spaces or dimensions");
    return x.amp.dot(y.amp);  // Eigen's dot conjugates the left factor
}

Operator tensor(const Operator& qubit_op, const Operator& cavity_op) {
    if (qubit_op.space != Space::qubit || cavity_op.space != Space::cavity)
        throw SpaceMismatch("tensor: expected qubit (x) cavity operands");
    int dq = qubit_op.dim(), dc = cavity_op.dim();
    Matrix out(dq * dc, dq * dc);
    for (int i = 0; i < dq; ++i)
        for (int j = 0; j < dq; ++j)
            out.block(i * dc, j * dc, dc, dc) = qubit_op.mat(i, j) * cavity_op.mat;
    return {out, Space::qubit_cavity};
}

StateVector tensor(const StateVector& qubit_part, const StateVector& cavity_part) {
    require_space(qubit_part, Space::qubit, "tensor");
    require_space(cavity_part, Space::cavity, "tensor");
    int dc = cavity_part.dim();
    Vector out(2 * dc);
    out.head(dc) = qubit_part.amp[0] * cavity_part.amp;
    out.tail(dc) = qubit_part.amp[1] * cavity_part.amp;
    return {out, Space::qubit_cavity};
}

DensityMatrix density(const StateVector& psi) {
    return {psi.amp * psi.amp.adjoint(), psi.space};
}

DensityMatrix partial_trace(const DensityMatrix& rho, Space keep) {
    if (rho.space != Space::qubit_cavity)
        throw SpaceMismatch("partial_trace: expected composite density matrix");
    int dc = rho.dim() / 2;
    if (keep == Space::qubit) {
        Matrix out = Matrix::Zero(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out(i, j) = rho.mat.block(i * dc, j * dc, dc, dc).trace();
        return {out, Space::qubit};
    }
    if (keep == Space::cavity) {
        Matrix out = Matrix::Zero(dc, dc);
        for (int q = 0; q < 2; ++q)
            out += rho.mat.block(q * dc, q * dc, dc, dc);
        return {out, Space::cavity};
    }
    throw SpaceMismatch("partial_trace: keep must be qubit or cavity");
}

}  // namespace fockspace
}  // namespace qcav
