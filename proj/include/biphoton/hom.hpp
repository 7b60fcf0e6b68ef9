#pragma once

#include <array>
#include <complex>
#include <vector>

#include "biphoton/lens.hpp"
#include "biphoton/source.hpp"

namespace biphoton {

// Dimensionless reduction of the source + imaging stage:
//   T_{o,e} = sqrt(2) Omega_p tau_{o,e} / sigma_s,   D = 2 Omega_p^2 D_f.
struct DimensionlessParams {
  double t_o = 0.0;
  double t_e = 0.0;
  double d = 0.0;          // dimensionless focal GDD
  double m = 0.0;          // magnification
  double omega_p = 0.0;    // rad/ps
  double sigma_cw = 0.0;   // rad/ps
  double focal_gdd = 0.0;  // ps^2, kept for the p_int prefactor

  void validate() const;
};

DimensionlessParams dimensionless(const SourceModel& model, const TimeLensSpec& lens);

// Reduced 2x2 quadratic form of the coincidence amplitude. Gamma entries carry
// ps^-2; both eigenvalues are positive for any parameters.
struct GammaForm {
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;  // ps^-2, g21 = g12
  double det_lambda = 0.0;                 // ps^8
  double nu = 0.0;                         // ps^-2
  double f_plus = 0.0, f_minus = 0.0;      // dimensionless
  double imag_residual = 0.0;  // numeric path: largest |Im| relative leak

  std::array<double, 2> eigenvalues() const;
  double quadratic(double w1, double w2) const {
    return g11 * w1 * w1 + 2.0 * g12 * w1 * w2 + g22 * w2 * w2;
  }
};

// The explicit closed forms (nu, det Lambda, F+-).
GammaForm gamma_closed(const DimensionlessParams& p);
// Independent route: invert the complex symmetric 4x4 Lambda numerically and
// contract its 2x2 blocks. This is the runtime default; the closed form backs
// it as a debug assertion.
GammaForm gamma_from_inversion(const DimensionlessParams& p);

struct LambdaSystem {
  std::array<std::array<std::complex<double>, 4>, 4> matrix;  // ps^2
  std::array<double, 4> v;                                    // ps
  double condition_estimate = 0.0;
};

// The 4x4 Gaussian-integral matrix and phase vector v = (dt, dt-dtau, -dt, dtau-dt).
// Throws DomainError with a condition-number report if numerically singular.
LambdaSystem lambda_matrix(const DimensionlessParams& p, double delta_t, double delta_tau);

enum class GammaPath { numeric_inversion, closed_form };

// Conditional probability that both photons leave the same beam-splitter port,
//   p_int = |T_e - T_o| D_f / (Omega_p^2 sqrt(det Lambda)) exp(-w^T Gamma w / 2),
// with w = (delta_t, delta_t - delta_tau).
double interference_probability(const DimensionlessParams& p, double delta_t, double delta_tau,
                                GammaPath path = GammaPath::numeric_inversion);
double interference_probability(const DimensionlessParams& p, const GammaForm& gamma,
                                double delta_t, double delta_tau);

// Delay of the coincidence dip, (1 + Gamma12/Gamma22) delta_t; -> (1-M) delta_t
// as D -> infinity.
double dip_location(const DimensionlessParams& p, double delta_t,
                    GammaPath path = GammaPath::numeric_inversion);

// V = p_int at the dip. 0 <= V <= 1; invariant under M -> -M at delta_t = 0.
double visibility(const DimensionlessParams& p, double delta_t,
                  GammaPath path = GammaPath::numeric_inversion);

// |M| maximizing the perfect-synchronization visibility,
//   M_opt = sqrt((1 + T_e^2)/(1 + T_o^2)) = dt_e/dt_o (either sign works).
double optimal_magnification(const DimensionlessParams& p);
double optimal_magnification(const SourceModel& model);

// Visibility at perfect synchronization and optimal magnification,
//   V = 2D / sqrt((T_e - T_o)^2 + 4 D^2).
double optimal_visibility(const DimensionlessParams& p);

// No-lens interferometer: p = 2/sqrt(4 + (T_e+T_o)^2) exp(-2 sigma_cw^2 dtau^2).
double lensless_interference_probability(const DimensionlessParams& p, double delta_tau);

struct CorrelationTimes {
  double cw = 0.0;      // ps, 0.5 / sigma_cw
  double pulsed = 0.0;  // ps, Gamma22^{-1/2}
};
CorrelationTimes correlation_times(const DimensionlessParams& p);

// Sampled normalized coincidence curve R(dtau) = 1 - p_int(dtau).
struct HomCurve {
  std::vector<double> delta_tau;  // ps
  std::vector<double> p_int;
  std::vector<double> rate;       // 1 - p_int, in units of P_b/2T
  double delta_tau_min = 0.0;     // ps, analytic dip location
  double visibility = 0.0;        // p_int at the dip
};

HomCurve hom_scan(const SourceModel& model, const TimeLensSpec& lens,
                  const std::vector<double>& delta_tau_ps,
                  GammaPath path = GammaPath::numeric_inversion);

}  // namespace biphoton
