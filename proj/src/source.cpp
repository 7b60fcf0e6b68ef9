#include "biphoton/source.hpp"

#include <cmath>

#include "biphoton/errors.hpp"
#include "biphoton/kernels.hpp"
#include "biphoton/units.hpp"

namespace biphoton {

double PumpSpec::sigma_t() const { return fwhm_duration_ps / fwhm_factor; }
double PumpSpec::omega_p() const { return 0.5 / sigma_t(); }
double PumpSpec::carrier() const { return wavelength_to_omega(wavelength_um); }

static void validate_pump(const PumpSpec& p) {
  if (!(p.wavelength_um > 0.0)) throw DomainError("pump wavelength must be positive");
  if (!(p.fwhm_duration_ps > 0.0)) throw DomainError("pump duration must be positive");
}

PumpSpec pump_from_duration(double wavelength_um, double fwhm_duration_ps, double t0_ps,
                            double amplitude) {
  PumpSpec p;
  p.wavelength_um = wavelength_um;
  p.fwhm_duration_ps = fwhm_duration_ps;
  p.t0_ps = t0_ps;
  p.amplitude = amplitude;
  validate_pump(p);
  // intensity FWHM in wavelength implied by the Gaussian transform limit
  const double dw = fwhm_factor * p.omega_p();
  p.fwhm_bandwidth_um = dw * wavelength_um * wavelength_um / (2.0 * pi * c_um_per_ps);
  return p;
}

PumpSpec pump_from_bandwidth(double wavelength_um, double fwhm_bandwidth_um, double t0_ps,
                             double amplitude) {
  if (!(fwhm_bandwidth_um > 0.0)) throw DomainError("pump bandwidth must be positive");
  const double dw = 2.0 * pi * c_um_per_ps * fwhm_bandwidth_um / (wavelength_um * wavelength_um);
  const double omega_p = dw / fwhm_factor;
  PumpSpec p;
  p.wavelength_um = wavelength_um;
  p.fwhm_duration_ps = fwhm_factor * 0.5 / omega_p;
  p.fwhm_bandwidth_um = fwhm_bandwidth_um;
  p.t0_ps = t0_ps;
  p.amplitude = amplitude;
  validate_pump(p);
  return p;
}

cdouble pump_spectrum(const PumpSpec& pump, double omega_rad_ps) {
  const double op = pump.omega_p();
  const double mag = pump.amplitude * std::sqrt(pi) / op *
                     std::exp(-omega_rad_ps * omega_rad_ps / (4.0 * op * op));
  return std::polar(mag, omega_rad_ps * pump.t0_ps);
}

void SourceModel::validate() const {
  if (!(omega_p > 0.0)) throw DomainError("Omega_p must be positive");
  if (!(sigma_s > 0.0)) throw DomainError("sigma_s must be positive");
  if (tau_o == tau_e)
    throw DomainError("degenerate source: tau_o == tau_e (all widths and HOM formulas divide by tau_e - tau_o)");
}

SourceModel make_source_model(const CrystalSpec& crystal, const PumpSpec& pump, double xi,
                              double sigma_s, SourceBuildInfo* info) {
  crystal.validate();
  validate_pump(pump);
  const double theta = solve_degenerate_angle(crystal, pump.wavelength_um);
  const double omega_pump = pump.carrier();
  const double omega_sub = 0.5 * omega_pump;
  const WaveDispersion p = group_quantities(crystal, theta, omega_pump, Wave::pump);
  const WaveDispersion o = group_quantities(crystal, theta, omega_sub, Wave::ordinary);
  const WaveDispersion e = group_quantities(crystal, theta, omega_sub, Wave::extraordinary);
  const double L = crystal.length_mm;

  SourceModel m;
  m.omega_p = pump.omega_p();
  m.tau_o = (p.k1 - o.k1) * L / 2.0;
  m.tau_e = (p.k1 - e.k1) * L / 2.0;
  m.sigma_s = sigma_s;
  m.xi = xi;
  m.carrier = omega_sub;
  m.t0 = pump.t0_ps;
  m.group_delay_pump = p.k1 * L;
  m.group_delay_o = o.k1 * L;
  m.group_delay_e = e.k1 * L;
  m.validate();

  if (info) {
    info->theta_p_deg = theta;
    info->mismatch_residual = degenerate_mismatch(crystal, pump.wavelength_um, theta);
    info->pump = p;
    info->ordinary = o;
    info->extraordinary = e;
  }
  return m;
}

cdouble phase_matching(const SourceModel& model, double omega_o, double omega_e) {
  const double x = model.tau_o * omega_o + model.tau_e * omega_e;
  return std::polar(1.0, x) * sinc(x);
}

cdouble phase_matching_gaussian(const SourceModel& model, double omega_o, double omega_e) {
  const double x = model.tau_o * omega_o + model.tau_e * omega_e;
  return std::polar(std::exp(-x * x / (2.0 * model.sigma_s * model.sigma_s)), x);
}

cdouble jsa_value(const SourceModel& model, double omega_o, double omega_e, JsaKind kind) {
  const double sum = omega_o + omega_e;
  const double op = model.omega_p;
  const cdouble pump = std::polar(
      model.xi * std::sqrt(pi) / op * std::exp(-sum * sum / (4.0 * op * op)), sum * model.t0);
  const cdouble pm = (kind == JsaKind::exact_sinc) ? phase_matching(model, omega_o, omega_e)
                                                   : phase_matching_gaussian(model, omega_o, omega_e);
  return pump * pm;
}

static std::vector<double> uniform_axis(double half_width, int points) {
  std::vector<double> axis(points);
  const double step = 2.0 * half_width / (points - 1);
  for (int i = 0; i < points; ++i) axis[i] = -half_width + step * i;
  return axis;
}

JsaGrid jsa(const SourceModel& model, const JsaGridSpec& spec, JsaKind kind) {
  model.validate();
  if (spec.points < 3) throw DomainError("JSA grid needs at least 3 points per axis");
  const SigmaPair sig = spectral_sigmas(model);
  const double smax = std::max(sig.ordinary, sig.extraordinary);
  const double w = spec.half_width_sigmas * smax;

  JsaGrid grid;
  grid.kind = kind;
  grid.axis_o = uniform_axis(w, spec.points);
  grid.axis_e = uniform_axis(w, spec.points);
  grid.values.resize(static_cast<std::size_t>(spec.points) * spec.points);
  if (spec.half_width_sigmas < 4.0)
    grid.warning = "grid narrower than 4 sigma; truncation above 1e-3 likely";

  const std::size_t ne = grid.axis_e.size();
  kern::fill_rows_parallel(grid.axis_o.size(), [&](std::size_t i) {
    const double wo = grid.axis_o[i];
    for (std::size_t j = 0; j < ne; ++j)
      grid.values[i * ne + j] = jsa_value(model, wo, grid.axis_e[j], kind);
  });
  return grid;
}

SigmaPair spectral_sigmas(const SourceModel& model) {
  model.validate();
  const double dt = std::abs(model.tau_e - model.tau_o);
  const double s2 = model.sigma_s * model.sigma_s;
  const double op2 = model.omega_p * model.omega_p;
  SigmaPair s;
  s.ordinary = std::sqrt(s2 + 2.0 * model.tau_e * model.tau_e * op2) / (std::sqrt(2.0) * dt);
  s.extraordinary = std::sqrt(s2 + 2.0 * model.tau_o * model.tau_o * op2) / (std::sqrt(2.0) * dt);
  return s;
}

SigmaPair temporal_sigmas(const SourceModel& model) {
  if (!(model.omega_p > 0.0)) throw DomainError("Omega_p must be positive");
  const double s2 = model.sigma_s * model.sigma_s;
  const double op2 = model.omega_p * model.omega_p;
  const double denom = 2.0 * model.sigma_s * model.omega_p;
  SigmaPair s;
  s.ordinary = std::sqrt(s2 + 2.0 * model.tau_o * model.tau_o * op2) / denom;
  s.extraordinary = std::sqrt(s2 + 2.0 * model.tau_e * model.tau_e * op2) / denom;
  return s;
}

double sigma_cw(const SourceModel& model) {
  model.validate();
  return model.sigma_s / (std::sqrt(2.0) * std::abs(model.tau_e - model.tau_o));
}

double biphoton_probability(const SourceModel& model) {
  model.validate();
  return std::sqrt(2.0) * pi * pi * model.xi * model.xi * model.sigma_s /
         (model.omega_p * std::abs(model.tau_e - model.tau_o));
}

double spectrum(const SourceModel& model, Photon photon, double omega_rad_ps) {
  const SigmaPair s = spectral_sigmas(model);
  const double sig = (photon == Photon::ordinary) ? s.ordinary : s.extraordinary;
  const double pb = biphoton_probability(model);
  return std::sqrt(2.0 * pi) * pb / sig * std::exp(-omega_rad_ps * omega_rad_ps / (2.0 * sig * sig));
}

double intensity_peak_time(const SourceModel& model, Photon photon) {
  return (photon == Photon::ordinary) ? model.t0 + model.tau_o + model.group_delay_o
                                      : model.t0 + model.tau_e + model.group_delay_e;
}

double intensity(const SourceModel& model, Photon photon, double t_ps) {
  const SigmaPair s = temporal_sigmas(model);
  const double dt = (photon == Photon::ordinary) ? s.ordinary : s.extraordinary;
  const double pb = biphoton_probability(model);
  const double arg = t_ps - intensity_peak_time(model, photon);
  return pb / (std::sqrt(2.0 * pi) * dt) * std::exp(-arg * arg / (2.0 * dt * dt));
}

double width_ratio(const SourceModel& model) {
  const SigmaPair s = temporal_sigmas(model);
  return s.extraordinary / s.ordinary;
}

}  // namespace biphoton
