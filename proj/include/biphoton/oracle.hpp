#pragma once

#include <string>
#include <vector>

#include "biphoton/hom.hpp"
#include "biphoton/lens.hpp"
#include "biphoton/source.hpp"

// Brute-force numerical cross-checks of every closed form in the library.
// Everything here integrates sampled integrands on tensor grids; nothing calls
// back into the closed-form expressions it is meant to verify.

namespace biphoton::oracle {

struct QuadratureSpec {
  int points = 257;                // per axis; >= 33 and odd
  double half_width_sigmas = 6.0;  // >= 4, in units of the axis-relevant sigma

  void validate() const;
};

struct PintResult {
  double value = 0.0;
  double imag_residual = 0.0;  // |Im| of the raw sum relative to |Re|
  int n_o = 0, n_e = 0;        // effective per-axis points after Nyquist floor
  double half_width_sigmas = 0.0;
};

// Quadruple-integral coincidence probability. The integrand carries the
// quadratic lens phase; the effective per-axis point count is raised to
// 8 samples per oscillation cycle and asserted at runtime. The grid half-width
// widens with the delay-induced suppression exponent (estimated from the
// numerically inverted Lambda, never from the closed-form Gamma).
PintResult pint_numeric(const SourceModel& model, const TimeLensSpec& lens, double delta_t,
                        double delta_tau, const QuadratureSpec& spec,
                        JsaKind kind = JsaKind::gaussian_model);

// Same integral for several delays at a fixed lens/sync setting; the expensive
// contraction is shared across the delay list.
std::vector<PintResult> pint_numeric_batch(const SourceModel& model, const TimeLensSpec& lens,
                                           double delta_t, const std::vector<double>& delta_taus,
                                           const QuadratureSpec& spec,
                                           JsaKind kind = JsaKind::gaussian_model);

// Literal four-fold loop over the same grid points (small N only); must agree
// with the factorized path to ~1e-12 relative.
PintResult pint_numeric_naive(const SourceModel& model, const TimeLensSpec& lens, double delta_t,
                              double delta_tau, const QuadratureSpec& spec,
                              JsaKind kind = JsaKind::gaussian_model);

struct SampledCurve {
  std::vector<double> x;
  std::vector<double> y;
};

struct Moments {
  double integral = 0.0;  // with the stated measure
  double mean = 0.0;
  double stddev = 0.0;
};

// S_mu on the grid axis: 2 pi * row/column sums of |J|^2.
SampledCurve marginal_numeric(const JsaGrid& grid, Photon photon);
// Trapezoid moments of a sampled curve; integral uses dx (divide by 2pi yourself
// where the measure is dOmega/2pi).
Moments moments(const SampledCurve& curve);
// Width of a sampled peak via its FWHM, converted to an equivalent Gaussian
// sigma. Robust for the exact-sinc marginals whose literal second moment does
// not converge.
double fwhm_equivalent_sigma(const SampledCurve& curve);

// Temporal intensity from the triple integral over the JSA (linear-dispersion
// phases included), sampled on t_grid.
std::vector<double> intensity_numeric(const SourceModel& model, Photon photon,
                                      const std::vector<double>& t_grid, const QuadratureSpec& spec,
                                      JsaKind kind = JsaKind::gaussian_model);

// Apply the stage transfer function to a sampled JSA by direct quadrature,
//   J_out(W, W') = e^{i (k_e' L + t_z) W'} Int G_o(W, Wbar) J(Wbar, W') dWbar / 2pi.
JsaGrid transfer_apply_numeric(const JsaGrid& grid, const SourceModel& model,
                               const TimeLensSpec& lens);

struct UnitarityReport {
  double offdiag_mass = 0.0;   // max row off-diagonal L1 mass / diagonal
  double diag_error = 0.0;     // max |diag - 2pi/h| / (2pi/h)
  int points = 0;              // integration points over the output axis
  double roundtrip_residual = 0.0;  // ||G_o^dag G_o J - J||_2 / ||J||_2
};

// Discretized check of Int G_o*(W,W1) G_o(W,W2) dW/2pi = 2pi delta(W1-W2) on a
// commensurate midpoint grid (range 2pi/(D_f h)), plus a forward+adjoint
// round trip on the source JSA whose residual must shrink under refinement.
UnitarityReport transfer_unitarity(const SourceModel& model, const TimeLensSpec& lens,
                                   int input_points, double half_width_sigmas);

struct CheckRow {
  std::string quantity;
  double closed_form = 0.0;
  double numeric = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckRow> rows;
  bool all_pass() const;
};

// The standard comparison suite used by `verify` and by the acceptance tests:
// p_int closed vs quadrature, marginals, P_b normalization, intensity shape,
// transfer round trip, naive-vs-factorized contraction, Gamma matrix paths.
CheckReport run_check_suite(const SourceModel& model, const TimeLensSpec& lens,
                            const QuadratureSpec& spec);

}  // namespace biphoton::oracle
