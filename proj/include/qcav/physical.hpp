#ifndef QCAV_PHYSICAL_HPP
#define QCAV_PHYSICAL_HPP

#include <string>
#include <vector>

#include "qcav/fockspace.hpp"

namespace qcav {

// Fabry-Perot geometry: two mirrors of curvature radius R separated by L,
// driven at wavelength lambda. All lengths in meters.
struct CavityGeometry {
    double mirror_radius = 0.0;
    double length = 0.0;
    double wavelength = 0.0;
};

// Device parameter set. Energies are stored as angular rates (rad/s, i.e.
// E/hbar); conversion from eV happens once at the boundary (ev_to_rad).
struct SystemParams {
    double ec = 0.0;      // charging energy / hbar
    double ej = 0.0;      // Josephson energy / hbar
    double n_g = 0.5;     // gate charge offset, Cooper pairs
    double phi_e = 0.0;   // externally applied flux phase, rad
    double phi_0 = 0.0;   // flux phase per cavity photon quadrature, dimensionless
    double omega = 0.0;   // cavity mode angular frequency, rad/s
    FockCutoff cutoff{30};
};

struct DerivedCouplings {
    double eta = 0.0;             // linear photon coupling, rad/s
    double delta = 0.0;           // quadratic photon coupling, rad/s
    double qubit_splitting = 0.0; // 8 E_C (n_g - 1/2) / hbar, rad/s
};

namespace physical {

double ev_to_rad(double energy_ev);

// Effective mode volume V = (pi/4) w0^2 L with waist
// w0^2 = (lambda / 2 pi) sqrt(L (2R - L)). Throws UnstableResonator
// unless 0 < L < 2R.
double mode_volume(const CavityGeometry& g);

// Vacuum magnetic field amplitude B = sqrt(hbar omega / (eps0 V c^2)), tesla.
double field_amplitude(double omega, double volume);

// Flux phase phi_0 = pi S B / Phi0 for loop area S (m^2).
double flux_phase(double loop_area, double b_field);

// eta = phi_0 (E_J/hbar) sin(phi_e), delta = (1/2) phi_0^2 (E_J/hbar) cos(phi_e).
DerivedCouplings couplings(const SystemParams& p);

// Gate charge that tunes the qubit splitting onto the cavity mode:
// n_g = 1/2 + omega hbar / (8 E_C). Throws OutOfRange when it exceeds 1.
double resonance_gate_charge(double ec, double omega);

// Full state transfer time pi / (2 eta). Throws ZeroCoupling for eta <= 0.
double storage_time(double eta);

// Hard checks (throws InvalidParams) plus soft warnings, e.g. when
// phi_0 sqrt(n_max) is large enough to strain the second-order expansion.
std::vector<std::string> validate(const SystemParams& p);

// Device point used throughout: R = 2.55 mm, L = 5 mm, 30 GHz mode,
// E_C = 122 ueV, E_J = 34 ueV, loop area 9.98e-11 m^2, phi_e = pi/2,
// gate charge on resonance.
SystemParams reference_device();

inline constexpr double default_loop_area = 9.98e-11;  // m^2

}  // namespace physical
}  // namespace qcav

#endif
