#ifndef QCAV_EVOLUTION_HPP
#define QCAV_EVOLUTION_HPP

#include <string>
#include <vector>

#include "qcav/fockspace.hpp"

namespace qcav {

// A sampled scalar-valued curve, ready for CSV emission.
struct TraceSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::string label;
};

namespace evolution {

// Process-wide tallies so tests can assert that a time series costs one
// eigendecomposition regardless of how many points it contains.
struct Counters {
    long decompositions = 0;
    long applications = 0;
};
Counters counters();
void reset_counters();

// Spectral propagator for a fixed Hermitian generator: diagonalize once,
// then U(t) = V exp(-i w t) V^dag for any t. Throws NotHermitian.
class Evolver {
public:
    explicit Evolver(const Operator& h);

    Space space() const { return space_; }
    int dim() const { return static_cast<int>(eigenvalues_.size()); }

    Operator propagator(double t) const;
    StateVector apply(const StateVector& psi, double t) const;
    std::vector<StateVector> evolve_series(const StateVector& psi0,
                                           const std::vector<double>& times) const;

private:
    Eigen::VectorXd eigenvalues_;
    Matrix eigenvectors_;
    Space space_;
};

// One-shot helper when no reuse across times is wanted.
StateVector evolve(const Operator& h, const StateVector& psi0, double t);

DensityMatrix reduced_qubit(const StateVector& psi);
DensityMatrix reduced_cavity(const StateVector& psi);

}  // namespace evolution
}  // namespace qcav

#endif
