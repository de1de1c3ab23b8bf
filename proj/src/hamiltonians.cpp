#include "qcav/hamiltonians.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace qcav::hamiltonians {

using fockspace::annihilation;
using fockspace::creation;
using fockspace::identity;
using fockspace::number_op;
using fockspace::qubit_ops;
using fockspace::tensor;

Operator cavity_cosine(double phi_e, double phi_0, FockCutoff cutoff) {
    Matrix a = annihilation(cutoff).mat;
    Matrix q = Complex(0, -1) * (a - a.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Matrix> es(q);
    Eigen::VectorXd cosvals =
        (phi_e + phi_0 * es.eigenvalues().array()).cos();
    Matrix c = es.eigenvectors() * cosvals.asDiagonal().toDenseMatrix().cast<Complex>() *
               es.eigenvectors().adjoint();
    return {c, Space::cavity};
}

Operator build_full(const SystemParams& p) {
    auto q = qubit_ops();
    Operator cosine = cavity_cosine(p.phi_e, p.phi_0, p.cutoff);
    Matrix h = 4.0 * p.ec * (p.n_g - 0.5) * tensor(q.sz, identity(p.cutoff)).mat -
               p.ej * tensor(q.sx, cosine).mat +
               p.omega * tensor(q.id, number_op(p.cutoff)).mat;
    return {h, Space::qubit_cavity};
}

Operator build_jc(const SystemParams& p, std::vector<std::string>* warnings) {
    auto c = physical::couplings(p);
    if (warnings) {
        double miss = std::abs(c.qubit_splitting - p.omega) / p.omega;
        if (miss > 1e-6)
            warnings->push_back("qubit splitting off cavity resonance by relative " +
                                std::to_string(miss));
    }
    auto q = qubit_ops();
    Matrix a = annihilation(p.cutoff).mat;
    // sm = |1><0| plays the raising role here (|1>_q is the excited state).
    Matrix h = -0.5 * p.omega * tensor(q.sz, identity(p.cutoff)).mat +
               Complex(0, 1) * c.eta *
                   (tensor(q.sm, {a, Space::cavity}).mat -
                    tensor(q.sp, {a.adjoint().eval(), Space::cavity}).mat) +
               p.omega * tensor(q.id, number_op(p.cutoff)).mat;
    return {h, Space::qubit_cavity};
}

Operator build_measurement(const SystemParams& p) {
    if (std::abs(p.n_g - 0.5) > 1e-12)
        throw GateChargeNotTuned("build_measurement: needs n_g = 1/2, got " +
                                 std::to_string(p.n_g));
    auto q = qubit_ops();
    Matrix h = -p.ej * tensor(q.sx, cavity_cosine(p.phi_e, p.phi_0, p.cutoff)).mat +
               p.omega * tensor(q.id, number_op(p.cutoff)).mat;
    return {h, Space::qubit_cavity};
}

Operator build_branch(const SystemParams& p, int k) {
    if (k != 0 && k != 1)
        throw OutOfRange("build_branch: k must be 0 or 1");
    double sign = (k == 0) ? 1.0 : -1.0;
    Matrix h = -sign * p.ej * cavity_cosine(p.phi_e, p.phi_0, p.cutoff).mat +
               p.omega * number_op(p.cutoff).mat;
    return {h, Space::cavity};
}

Operator build_expanded(const SystemParams& p) {
    auto c = physical::couplings(p);
    auto q = qubit_ops();
    Matrix a = annihilation(p.cutoff).mat;
    Matrix ad = a.adjoint();
    Matrix m = p.ej * std::cos(p.phi_e) * Matrix::Identity(p.cutoff.dim(), p.cutoff.dim()) +
               Complex(0, 1) * c.eta * (a - ad) +
               c.delta * (a * a + ad * ad - a * ad - ad * a);
    Matrix h = -tensor(q.sx, {m, Space::cavity}).mat +
               p.omega * tensor(q.id, number_op(p.cutoff)).mat;
    return {h, Space::qubit_cavity};
}

}  // namespace qcav::hamiltonians
