#include "biphoton/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "biphoton/errors.hpp"
#include "biphoton/units.hpp"

namespace biphoton {

SellmeierSet bbo_ordinary() {
  return {2.7405, 0.0184, 0.0179, -0.0155, 0.2, 3.0};
}

SellmeierSet bbo_extraordinary() {
  return {2.3730, 0.0128, 0.0156, -0.0044, 0.2, 3.0};
}

void CrystalSpec::validate() const {
  if (!(length_mm > 0.0)) throw DomainError("crystal length must be positive");
  if (!(ordinary.window_lo_um < ordinary.window_hi_um))
    throw DomainError("ordinary Sellmeier window is empty");
  if (!(extraordinary.window_lo_um < extraordinary.window_hi_um))
    throw DomainError("extraordinary Sellmeier window is empty");
}

CrystalSpec make_crystal(const std::string& material_name, double length_mm) {
  std::string name = material_name;
  std::transform(name.begin(), name.end(), name.begin(), ::tolower);
  if (name == "bbo") {
    CrystalSpec c{length_mm, bbo_ordinary(), bbo_extraordinary()};
    c.validate();
    return c;
  }
  throw ValidationError("unknown crystal material '" + material_name + "' (built-in: BBO)");
}

static void check_window(const SellmeierSet& set, double lambda_um) {
  if (lambda_um < set.window_lo_um || lambda_um > set.window_hi_um) {
    std::ostringstream os;
    os << "wavelength " << lambda_um << " um outside Sellmeier validity window ["
       << set.window_lo_um << ", " << set.window_hi_um << "] um";
    throw DomainError(os.str());
  }
}

double index(const SellmeierSet& set, double lambda_um) {
  check_window(set, lambda_um);
  const double l2 = lambda_um * lambda_um;
  const double n2 = set.a + set.b / (l2 - set.c) + set.d * l2;
  if (!(n2 > 1.0)) throw DomainError("Sellmeier evaluation gave n^2 <= 1");
  return std::sqrt(n2);
}

IndexDerivatives index_derivatives(const SellmeierSet& set, double lambda_um) {
  const double n = index(set, lambda_um);
  const double l = lambda_um;
  const double q = l * l - set.c;
  // n^2 = a + b/q + d l^2 ; differentiate twice in lambda.
  const double f = -set.b * l / (q * q) + set.d * l;          // (n^2)'/2
  const double fp = set.b * (3.0 * l * l + set.c) / (q * q * q) + set.d;
  IndexDerivatives out;
  out.n = n;
  out.dn_dlambda = f / n;
  out.d2n_dlambda2 = fp / n - f * f / (n * n * n);
  return out;
}

double extraordinary_index(const CrystalSpec& crystal, double lambda_um, double theta_deg) {
  if (theta_deg < 0.0 || theta_deg > 90.0)
    throw DomainError("propagation angle must lie in [0, 90] deg");
  const double th = deg_to_rad(theta_deg);
  const double no = index(crystal.ordinary, lambda_um);
  const double nE = index(crystal.extraordinary, lambda_um);
  const double c2 = std::cos(th) * std::cos(th);
  const double s2 = std::sin(th) * std::sin(th);
  return 1.0 / std::sqrt(c2 / (no * no) + s2 / (nE * nE));
}

IndexDerivatives extraordinary_index_derivatives(const CrystalSpec& crystal, double lambda_um,
                                                 double theta_deg) {
  const double th = deg_to_rad(theta_deg);
  const double c2 = std::cos(th) * std::cos(th);
  const double s2 = std::sin(th) * std::sin(th);
  const IndexDerivatives o = index_derivatives(crystal.ordinary, lambda_um);
  const IndexDerivatives e = index_derivatives(crystal.extraordinary, lambda_um);

  const double u = c2 / (o.n * o.n) + s2 / (e.n * e.n);
  const double up = -2.0 * c2 * o.dn_dlambda / std::pow(o.n, 3) -
                    2.0 * s2 * e.dn_dlambda / std::pow(e.n, 3);
  const double upp =
      -2.0 * c2 * (o.d2n_dlambda2 / std::pow(o.n, 3) - 3.0 * o.dn_dlambda * o.dn_dlambda / std::pow(o.n, 4)) -
      2.0 * s2 * (e.d2n_dlambda2 / std::pow(e.n, 3) - 3.0 * e.dn_dlambda * e.dn_dlambda / std::pow(e.n, 4));

  IndexDerivatives out;
  out.n = 1.0 / std::sqrt(u);
  out.dn_dlambda = -0.5 * up * std::pow(out.n, 3);
  out.d2n_dlambda2 = -0.5 * upp * std::pow(out.n, 3) + 0.75 * up * up * std::pow(out.n, 5);
  return out;
}

double degenerate_mismatch(const CrystalSpec& crystal, double lambda_pump_um, double theta_deg) {
  const double lambda_sub = 2.0 * lambda_pump_um;
  const double omega_pump = wavelength_to_omega(lambda_pump_um);
  const double omega_sub = 0.5 * omega_pump;
  const double kp = extraordinary_index(crystal, lambda_pump_um, theta_deg) * omega_pump / c_mm_per_ps;
  const double ko = index(crystal.ordinary, lambda_sub) * omega_sub / c_mm_per_ps;
  const double ke = extraordinary_index(crystal, lambda_sub, theta_deg) * omega_sub / c_mm_per_ps;
  return kp - ko - ke;  // rad/mm
}

double solve_degenerate_angle(const CrystalSpec& crystal, double lambda_pump_um) {
  crystal.validate();
  double lo = 0.1, hi = 89.9;
  double flo = degenerate_mismatch(crystal, lambda_pump_um, lo);
  double fhi = degenerate_mismatch(crystal, lambda_pump_um, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0)
    throw DomainError("no type-II phase matching: mismatch has no sign change on [0.1, 89.9] deg");

  double mid = 0.5 * (lo + hi), fmid = 0.0;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at machine resolution
    fmid = degenerate_mismatch(crystal, lambda_pump_um, mid);
    if (fmid == 0.0) break;
    if (flo * fmid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
    if ((hi - lo) < 1e-10 * mid && std::abs(fmid) < 1e-10) break;
  }
  return mid;
}

WaveDispersion group_quantities(const CrystalSpec& crystal, double theta_deg, double carrier_rad_ps,
                                Wave wave) {
  const double lambda = omega_to_wavelength(carrier_rad_ps);
  const IndexDerivatives d = (wave == Wave::ordinary)
                                 ? index_derivatives(crystal.ordinary, lambda)
                                 : extraordinary_index_derivatives(crystal, lambda, theta_deg);
  WaveDispersion out;
  out.carrier = carrier_rad_ps;
  out.wave = wave;
  out.k0 = d.n * carrier_rad_ps / c_mm_per_ps;
  out.k1 = (d.n - lambda * d.dn_dlambda) / c_mm_per_ps;  // group index / c
  // k'' = lambda^3 n'' / (2 pi c^2); lambda in um, c in um/ps -> ps^2/um.
  out.k2 = 1000.0 * std::pow(lambda, 3) * d.d2n_dlambda2 / (2.0 * pi * c_um_per_ps * c_um_per_ps);
  if (!std::isfinite(out.k0) || !std::isfinite(out.k1) || !std::isfinite(out.k2))
    throw DomainError("non-finite dispersion quantities");
  return out;
}

}  // namespace biphoton
