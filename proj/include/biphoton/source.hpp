#pragma once

#include <complex>
#include <string>
#include <vector>

#include "biphoton/dispersion.hpp"

namespace biphoton {

using cdouble = std::complex<double>;

// Transform-limited Gaussian pump pulse. Exactly one of FWHM duration or FWHM
// bandwidth is given; the other is derived.
struct PumpSpec {
  double wavelength_um = 0.0;
  double fwhm_duration_ps = 0.0;   // tau_p
  double fwhm_bandwidth_um = 0.0;  // intensity FWHM in wavelength
  double t0_ps = 0.0;
  double amplitude = 1.0;

  double sigma_t() const;      // ps, intensity std of the pulse
  double omega_p() const;      // rad/ps, 1/(2 sigma_t)
  double carrier() const;      // rad/ps
};

PumpSpec pump_from_duration(double wavelength_um, double fwhm_duration_ps, double t0_ps = 0.0,
                            double amplitude = 1.0);
PumpSpec pump_from_bandwidth(double wavelength_um, double fwhm_bandwidth_um, double t0_ps = 0.0,
                             double amplitude = 1.0);

// alpha(Omega) = E0 (sqrt(pi)/Omega_p) exp(-Omega^2/4 Omega_p^2 + i Omega t0)
cdouble pump_spectrum(const PumpSpec& pump, double omega_rad_ps);

// Reduced Gaussian biphoton model: everything downstream (spectra, temporal
// shapes, HOM) is a function of these numbers alone.
struct SourceModel {
  double omega_p = 0.0;   // rad/ps, pump spectral scale
  double tau_o = 0.0;     // ps, ordinary relative group delay at L/2
  double tau_e = 0.0;     // ps, extraordinary relative group delay at L/2
  double sigma_s = 1.61;  // Gaussian stand-in width for sinc
  double xi = 1.0;        // coupling scale kappa*L*E0 (only xi^2 observable)
  double carrier = 0.0;   // rad/ps, subharmonic carrier
  double t0 = 0.0;        // ps, pump peak time at crystal entrance
  // Absolute group delays k'_mu L for time bookkeeping (ps).
  double group_delay_pump = 0.0;
  double group_delay_o = 0.0;
  double group_delay_e = 0.0;

  void validate() const;  // throws DomainError (tau_o == tau_e, ...)
};

struct SourceBuildInfo {
  double theta_p_deg = 0.0;
  double mismatch_residual = 0.0;  // rad/mm at the returned angle
  WaveDispersion pump, ordinary, extraordinary;
};

// Full pipeline: phase-matching angle, group delays, pump scale.
SourceModel make_source_model(const CrystalSpec& crystal, const PumpSpec& pump, double xi,
                              double sigma_s = 1.61, SourceBuildInfo* info = nullptr);

// Phase-matching function in the linear-dispersion reduction,
//   Phi(W, W') = exp(i (tau_o W + tau_e W')) sinc(tau_o W + tau_e W')
cdouble phase_matching(const SourceModel& model, double omega_o, double omega_e);
// Gaussian model, exp(-x^2/2 sigma_s^2 + i x) with x = tau_o W + tau_e W'.
cdouble phase_matching_gaussian(const SourceModel& model, double omega_o, double omega_e);

enum class JsaKind { exact_sinc, gaussian_model };

struct JsaGridSpec {
  int points = 257;               // per axis, odd so Omega = 0 is a node
  double half_width_sigmas = 6.0; // in units of max(sigma_o, sigma_e)
};

// Sampled joint spectral amplitude. Row index i runs over the ordinary
// frequency axis, column index j over the extraordinary axis.
struct JsaGrid {
  std::vector<double> axis_o;  // rad/ps, strictly increasing, uniform
  std::vector<double> axis_e;
  std::vector<cdouble> values; // row-major, values[i * axis_e.size() + j]
  JsaKind kind = JsaKind::gaussian_model;
  std::string warning;         // nonempty if coverage below 4 sigma

  cdouble at(std::size_t i, std::size_t j) const { return values[i * axis_e.size() + j]; }
  double step_o() const { return axis_o[1] - axis_o[0]; }
  double step_e() const { return axis_e[1] - axis_e[0]; }
};

JsaGrid jsa(const SourceModel& model, const JsaGridSpec& spec, JsaKind kind);

cdouble jsa_value(const SourceModel& model, double omega_o, double omega_e, JsaKind kind);

enum class Photon { ordinary, extraordinary };

struct SigmaPair {
  double ordinary = 0.0;
  double extraordinary = 0.0;
};

// Spectral standard deviations (rad/ps): sigma_o = sqrt(sigma_s^2 + 2 tau_e^2
// Omega_p^2) / (sqrt(2) |tau_e - tau_o|); sigma_e with tau_o <-> tau_e.
SigmaPair spectral_sigmas(const SourceModel& model);
// Temporal standard deviations (ps): dt_o = sqrt(sigma_s^2 + 2 tau_o^2
// Omega_p^2) / (2 sigma_s Omega_p); dt_e with tau_o <-> tau_e.
SigmaPair temporal_sigmas(const SourceModel& model);

// CW-pump limit of both spectral widths, sigma_s / (sqrt(2) |tau_e - tau_o|).
double sigma_cw(const SourceModel& model);

// Pair-generation probability per pump pulse (units of xi^2),
//   P_b = sqrt(2) pi^2 xi^2 sigma_s / (Omega_p |tau_e - tau_o|).
double biphoton_probability(const SourceModel& model);

// Marginal spectrum S_mu(Omega) and temporal intensity I_mu(t); both integrate
// to P_b (dOmega/2pi and dt respectively).
double spectrum(const SourceModel& model, Photon photon, double omega_rad_ps);
double intensity(const SourceModel& model, Photon photon, double t_ps);
// Peak time of I_mu: t0 + tau_mu + k'_mu L.
double intensity_peak_time(const SourceModel& model, Photon photon);

// |Delta t_e / Delta t_o| = sigma_o / sigma_e; also the optimal |M| downstream.
double width_ratio(const SourceModel& model);

}  // namespace biphoton
