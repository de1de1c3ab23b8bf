#include "qcav/evolution.hpp"

#include <Eigen/Eigenvalues>
#include <atomic>
#include <cmath>

#include "qcav/errors.hpp"

namespace qcav {
namespace evolution {
namespace {

constexpr double kHermitianTol = 1e-9;

std::atomic<long> g_decompositions{0};
std::atomic<long> g_applications{0};

}  // namespace

Counters counters() {
    return {g_decompositions.load(), g_applications.load()};
}

void reset_counters() {
    g_decompositions = 0;
    g_applications = 0;
}

Evolver::Evolver(const Operator& h) : space_(h.space) {
    const double scale = std::max(1.0, h.mat.cwiseAbs().maxCoeff());
    const double asym = (h.mat - h.mat.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTol * scale) {
        throw NotHermitian("generator deviates from Hermitian by " +
                           std::to_string(asym));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.mat);
    if (solver.info() != Eigen::Success) {
        throw NotHermitian("eigendecomposition failed to converge");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
    ++g_decompositions;
}

Operator Evolver::propagator(double t) const {
    Vector phases(eigenvalues_.size());
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
        phases[i] = std::exp(Complex(0.0, -eigenvalues_[i] * t));
    }
    ++g_applications;
    return {eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint(),
            space_};
}

StateVector Evolver::apply(const StateVector& psi, double t) const {
    if (psi.space != space_ || psi.amp.size() != eigenvalues_.size()) {
        throw SpaceMismatch("state does not live in the generator's space");
    }
    Vector w = eigenvectors_.adjoint() * psi.amp;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        w[i] *= std::exp(Complex(0.0, -eigenvalues_[i] * t));
    }
    ++g_applications;
    return {eigenvectors_ * w, space_};
}

std::vector<StateVector> Evolver::evolve_series(
    const StateVector& psi0, const std::vector<double>& times) const {
    if (psi0.space != space_ || psi0.amp.size() != eigenvalues_.size()) {
        throw SpaceMismatch("state does not live in the generator's space");
    }
    const Vector w0 = eigenvectors_.adjoint() * psi0.amp;
    std::vector<StateVector> out;
    out.reserve(times.size());
    Vector w(w0.size());
    for (double t : times) {
        for (Eigen::Index i = 0; i < w.size(); ++i) {
            w[i] = w0[i] * std::exp(Complex(0.0, -eigenvalues_[i] * t));
        }
        ++g_applications;
        out.push_back({eigenvectors_ * w, psi0.space});
    }
    return out;
}

StateVector evolve(const Operator& h, const StateVector& psi0, double t) {
    return Evolver(h).apply(psi0, t);
}

DensityMatrix reduced_qubit(const StateVector& psi) {
    return fockspace::partial_trace(fockspace::density(psi), Space::qubit);
}

DensityMatrix reduced_cavity(const StateVector& psi) {
    return fockspace::partial_trace(fockspace::density(psi), Space::cavity);
}

}  // namespace evolution
}  // namespace qcav
