#pragma once

#include <cmath>

// Unit conventions used throughout the library:
//   time               ps
//   angular frequency  rad/ps
//   wavelength         um  (nm accepted at the CLI boundary only)
//   crystal length     mm
//   wave vector        rad/mm
//   GDD                ps^2

namespace biphoton {

inline constexpr double c_mm_per_ps = 0.299792458;
inline constexpr double c_um_per_ps = 299.792458;
inline constexpr double pi = 3.14159265358979323846;

// FWHM of a Gaussian intensity profile <-> standard deviation.
inline constexpr double fwhm_factor = 2.3548200450309493;  // 2*sqrt(2*ln 2)

inline double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }

inline double wavelength_to_omega(double lambda_um) {
  return 2.0 * pi * c_um_per_ps / lambda_um;  // rad/ps
}
inline double omega_to_wavelength(double omega_rad_ps) {
  return 2.0 * pi * c_um_per_ps / omega_rad_ps;  // um
}

// sinc(x) = sin(x)/x, sinc(0) = 1.
inline double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

}  // namespace biphoton
