#ifndef QCAV_CONSTANTS_HPP
#define QCAV_CONSTANTS_HPP

// Physical constants, CODATA 2018. The first four are exact by definition
// of the SI; vacuum permittivity is the recommended measured value.
namespace qcav::constants {

inline constexpr double planck = 6.62607015e-34;         // J s (exact)
inline constexpr double hbar = 1.054571817e-34;          // J s (h / 2 pi, derived)
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)
inline constexpr double speed_of_light = 299792458.0;    // m / s (exact)
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F / m
inline constexpr double flux_quantum = planck / (2.0 * elementary_charge);  // Wb, h / 2e

}  // namespace qcav::constants

#endif
