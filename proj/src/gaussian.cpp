#include "qcav/gaussian.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qcav/errors.hpp"

namespace qcav {
namespace gaussian {
namespace {

constexpr double kBogoliubovTol = 1e-9;
constexpr double kDegenerateTol = 1e-14;

double branch_sign(int k) {
    if (k != 0 && k != 1) {
        throw OutOfRange("branch index must be 0 or 1, got " +
                         std::to_string(k));
    }
    return k == 0 ? 1.0 : -1.0;
}

void check_bogoliubov(const SqueezedParams& sp, const char* which) {
    const double r = std::norm(sp.mu) - std::norm(sp.nu);
    if (std::abs(r - 1.0) > kBogoliubovTol) {
        throw InvalidBogoliubov(std::string(which) +
                                " violates |mu|^2 - |nu|^2 = 1 by " +
                                std::to_string(r - 1.0));
    }
}

}  // namespace

BranchFrequencies branch_frequencies(int k, const SystemParams& p) {
    const double s = branch_sign(k);
    const DerivedCouplings c = physical::couplings(p);
    const double om2 = p.omega * p.omega + s * 4.0 * c.delta * p.omega;
    if (om2 <= 0.0) {
        throw SqueezingUnstable("branch " + std::to_string(k) +
                                " frequency imaginary: omega^2 " +
                                std::to_string(om2) +
                                " (requires omega > 4|delta|)");
    }
    return {std::sqrt(om2), std::sqrt(om2) / p.omega};
}

SqueezedParams branch_params(int k, const SystemParams& p, Complex alpha,
                             double t) {
    const double s = branch_sign(k);
    const DerivedCouplings c = physical::couplings(p);
    // Both branches must be stable even when only one is being evaluated;
    // the unstable one invalidates the Gaussian description as a whole.
    branch_frequencies(0, p);
    branch_frequencies(1, p);
    const double om = branch_frequencies(k, p).omega_k;

    const double cos_t = std::cos(om * t);
    const double sin_t = std::sin(om * t);
    const double d = s * c.delta;

    SqueezedParams sp;
    sp.mu = Complex(cos_t, (p.omega + 2.0 * d) / om * sin_t);
    sp.nu = Complex(0.0, 2.0 * d / om * sin_t);
    sp.beta = alpha + (s * c.eta / om) *
                          Complex(sin_t, (p.omega / om) * (1.0 - cos_t));
    sp.theta = (c.eta * c.eta * p.omega / (om * om) +
                s * p.ej * std::cos(p.phi_e)) *
               t;
    return sp;
}

Complex squeezed_overlap(const SqueezedParams& p1, const SqueezedParams& p0) {
    check_bogoliubov(p1, "left state");
    check_bogoliubov(p0, "right state");
    if (std::abs(std::conj(p1.mu) * p0.mu - std::conj(p1.nu) * p0.nu) <
        kDegenerateTol) {
        throw DegenerateDenominator("mu1* mu0 - nu1* nu0 underflows");
    }

    const Complex xi1 = p1.nu / p1.mu;
    const Complex xi0 = p0.nu / p0.mu;
    const Complex kap1 = p1.beta / p1.mu;
    const Complex kap0 = p0.beta / p0.mu;
    const Complex den = 1.0 - std::conj(xi1) * xi0;

    const double n1 =
        std::pow(std::abs(p1.mu), -0.5) *
        std::exp(-0.5 * std::norm(p1.beta) -
                 0.5 * std::real(std::conj(p1.nu) * p1.beta * p1.beta / p1.mu));
    const double n0 =
        std::pow(std::abs(p0.mu), -0.5) *
        std::exp(-0.5 * std::norm(p0.beta) -
                 0.5 * std::real(std::conj(p0.nu) * p0.beta * p0.beta / p0.mu));

    const Complex quad = (2.0 * std::conj(kap1) * kap0 +
                          xi0 * std::conj(kap1) * std::conj(kap1) +
                          std::conj(xi1) * kap0 * kap0) /
                         (2.0 * den);
    const Complex phase = std::exp(Complex(0.0, p0.theta - p1.theta));
    return phase * n1 * n0 * std::exp(quad) / std::sqrt(den);
}

double decoherence_factor(const SystemParams& p, Complex alpha, double t) {
    const SqueezedParams d1 = branch_params(1, p, alpha, t);
    const SqueezedParams d0 = branch_params(0, p, alpha, t);
    return std::abs(squeezed_overlap(d1, d0));
}

double displacement_factor(const SystemParams& p, double t) {
    if (std::abs(std::cos(p.phi_e)) > 1e-9) {
        throw PreconditionViolated(
            "displacement-only closed form needs cos(phi_e) = 0");
    }
    const DerivedCouplings c = physical::couplings(p);
    const double s = std::sin(0.5 * p.omega * t);
    return std::exp(-8.0 * c.eta * c.eta / (p.omega * p.omega) * s * s);
}

std::vector<TraceSeries> decoherence_curves(const SystemParams& p,
                                            const std::vector<Complex>& alphas,
                                            const std::vector<double>& times) {
    std::vector<TraceSeries> out;
    out.reserve(alphas.size());
    for (const Complex& alpha : alphas) {
        TraceSeries series;
        char label[64];
        if (alpha.imag() == 0.0) {
            std::snprintf(label, sizeof(label), "alpha=%g", alpha.real());
        } else {
            std::snprintf(label, sizeof(label), "alpha=%g%+gi", alpha.real(),
                          alpha.imag());
        }
        series.label = label;
        series.times = times;
        series.values.reserve(times.size());
        for (double t : times) {
            series.values.push_back(decoherence_factor(p, alpha, t));
        }
        out.push_back(std::move(series));
    }
    return out;
}

}  // namespace gaussian
}  // namespace qcav
