#pragma once

#include <optional>
#include <string>

namespace biphoton {

// One principal refractive index of a uniaxial crystal,
//   n^2(lambda) = a + b / (lambda^2 - c) + d * lambda^2,   lambda in um.
// Coefficients outside [window_lo, window_hi] are not trusted and evaluation
// there raises DomainError.
struct SellmeierSet {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double window_lo_um = 0.2;
  double window_hi_um = 3.0;
};

// Built-in BBO coefficient sets (Eimerl et al., J. Appl. Phys. 62, 1968 (1987)).
SellmeierSet bbo_ordinary();
SellmeierSet bbo_extraordinary();

struct CrystalSpec {
  double length_mm = 0.0;
  SellmeierSet ordinary;
  SellmeierSet extraordinary;  // principal value, theta = 90 deg

  void validate() const;  // throws DomainError
};

CrystalSpec make_crystal(const std::string& material_name, double length_mm);

// n(lambda) with first and second wavelength derivatives (analytic).
struct IndexDerivatives {
  double n = 0.0;
  double dn_dlambda = 0.0;    // 1/um
  double d2n_dlambda2 = 0.0;  // 1/um^2
};

double index(const SellmeierSet& set, double lambda_um);
IndexDerivatives index_derivatives(const SellmeierSet& set, double lambda_um);

// Extraordinary index at propagation angle theta to the optic axis:
//   n_e(theta)^-2 = cos^2(theta)/n_o^2 + sin^2(theta)/n_E^2
double extraordinary_index(const CrystalSpec& crystal, double lambda_um, double theta_deg);
IndexDerivatives extraordinary_index_derivatives(const CrystalSpec& crystal, double lambda_um,
                                                 double theta_deg);

// Collinear frequency-degenerate type-II matching angle: the root of
//   k_e(theta; lambda_p) - k_o(lambda_p * 2) - k_e(theta; lambda_p * 2) = 0
// located by bisection on [0.1, 89.9] deg. Throws DomainError when the bracket
// has no sign change (no phase matching).
double solve_degenerate_angle(const CrystalSpec& crystal, double lambda_pump_um);

// Phase-mismatch k_p - k_o - k_e at the carrier (rad/mm), used for residual checks.
double degenerate_mismatch(const CrystalSpec& crystal, double lambda_pump_um, double theta_deg);

enum class Wave { pump, ordinary, extraordinary };

struct WaveDispersion {
  double k0 = 0.0;           // rad/mm
  double k1 = 0.0;           // ps/mm (inverse group velocity)
  double k2 = 0.0;           // ps^2/mm (group-velocity dispersion)
  double carrier = 0.0;      // rad/ps
  Wave wave = Wave::ordinary;
};

// k0, k', k'' at the given carrier. The pump and the extraordinary subharmonic
// use the angle-dependent index at theta; the ordinary wave ignores theta.
WaveDispersion group_quantities(const CrystalSpec& crystal, double theta_deg, double carrier_rad_ps,
                                Wave wave);

}  // namespace biphoton
