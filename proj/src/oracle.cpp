#include "qcav/oracle.hpp"

#include <cmath>
#include <string>

#include "qcav/errors.hpp"
#include "qcav/hamiltonians.hpp"

namespace qcav {
namespace oracle {
namespace {

constexpr double kLeakTol = 1e-8;

// Population of the two highest cavity levels, summed over qubit components
// when the state lives in the joint space.
double top_level_occupancy(const StateVector& psi, int cavity_dim) {
    double occ = 0.0;
    const int blocks = static_cast<int>(psi.amp.size()) / cavity_dim;
    for (int b = 0; b < blocks; ++b) {
        occ += std::norm(psi.amp[b * cavity_dim + cavity_dim - 1]);
        occ += std::norm(psi.amp[b * cavity_dim + cavity_dim - 2]);
    }
    return occ;
}

void check_leakage(const StateVector& psi, int cavity_dim, std::size_t idx) {
    const double occ = top_level_occupancy(psi, cavity_dim);
    if (occ > kLeakTol) {
        throw TruncationError("evolved state leaks into the truncation edge "
                              "(occupancy " +
                              std::to_string(occ) + " at time index " +
                              std::to_string(idx) + ")");
    }
}

// The second-order generator restricted to one sigma_x eigenspace. The full
// operator has the form I (x) X + sigma_x (x) Y, whose restriction to the
// eigenvalue-s subspace is X + s Y: the top-left qubit block plus s times
// the top-right one.
Operator quadratic_branch(const SystemParams& p, int k) {
    const Matrix h = hamiltonians::build_expanded(p).mat;
    const int d = p.cutoff.dim();
    const double s = (k == 0) ? 1.0 : -1.0;
    Matrix block = h.topLeftCorner(d, d) + s * h.block(0, d, d, d);
    return {block, Space::cavity};
}

}  // namespace

TraceSeries numeric_decoherence(const SystemParams& p, Complex alpha,
                                const std::vector<double>& times,
                                BranchModel model) {
    const StateVector start = fockspace::coherent_state(alpha, p.cutoff);
    const bool cosine = model == BranchModel::cosine;
    const evolution::Evolver e0(cosine ? hamiltonians::build_branch(p, 0)
                                       : quadratic_branch(p, 0));
    const evolution::Evolver e1(cosine ? hamiltonians::build_branch(p, 1)
                                       : quadratic_branch(p, 1));

    const std::vector<StateVector> psi0 = e0.evolve_series(start, times);
    const std::vector<StateVector> psi1 = e1.evolve_series(start, times);

    TraceSeries out;
    out.times = times;
    out.label = cosine ? "D_numeric_cosine" : "D_numeric_quadratic";
    out.values.reserve(times.size());
    const int d = p.cutoff.dim();
    for (std::size_t i = 0; i < times.size(); ++i) {
        check_leakage(psi0[i], d, i);
        check_leakage(psi1[i], d, i);
        out.values.push_back(std::abs(fockspace::overlap(psi1[i], psi0[i])));
    }
    return out;
}

TraceSeries numeric_transfer(const SystemParams& p, const QubitAmplitudes& q,
                             const std::vector<double>& times) {
    const double n2 = std::norm(q.alpha) + std::norm(q.beta);
    if (std::abs(n2 - 1.0) > 1e-10) {
        throw NotNormalized("qubit amplitudes have squared norm " +
                            std::to_string(n2));
    }
    const DerivedCouplings c = physical::couplings(p);
    if (c.eta <= 0.0) {
        throw ZeroCoupling("swap time undefined without exchange coupling");
    }

    const StateVector initial = fockspace::tensor(
        fockspace::qubit_state(q.alpha, q.beta),
        fockspace::fock_state(0, p.cutoff));
    const evolution::Evolver prop(hamiltonians::build_jc(p));
    const StateVector target =
        prop.apply(initial, physical::storage_time(c.eta));

    const std::vector<StateVector> states = prop.evolve_series(initial, times);
    TraceSeries out;
    out.times = times;
    out.label = "P_numeric";
    out.values.reserve(times.size());
    const int d = p.cutoff.dim();
    for (std::size_t i = 0; i < times.size(); ++i) {
        check_leakage(states[i], d, i);
        out.values.push_back(std::norm(fockspace::overlap(target, states[i])));
    }
    return out;
}

double expansion_error(const SystemParams& p) {
    SystemParams tuned = p;
    tuned.n_g = 0.5;
    const Matrix diff = hamiltonians::build_full(tuned).mat -
                        hamiltonians::build_expanded(tuned).mat;
    const int d = p.cutoff.dim();
    const int h = d / 2;
    double worst = 0.0;
    for (int qr = 0; qr < 2; ++qr) {
        for (int qc = 0; qc < 2; ++qc) {
            worst = std::max(
                worst,
                diff.block(qr * d, qc * d, h, h).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

}  // namespace oracle
}  // namespace qcav
