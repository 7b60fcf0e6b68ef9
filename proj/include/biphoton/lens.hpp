#pragma once

#include <limits>
#include <variant>

#include "biphoton/source.hpp"

namespace biphoton {

// Time-lens hardware models. The ideal lens has an unlimited temporal aperture.
struct IdealLens {
  double focal_gdd_ps2 = 0.0;
};
struct EopmLens {
  double theta_max_rad = 0.0;   // maximal phase shift
  double rf_frequency_ghz = 0.0;
};
struct FwmLens {
  double pump_fwhm_ps = 0.0;    // tau_0 of the FWM pump
  double pump_gdd_ps2 = 0.0;    // D_p (sign carried)
};
using LensRealization = std::variant<IdealLens, EopmLens, FwmLens>;

// Single-lens temporal imaging stage. Invariants (enforced on construction):
//   1/D_in + 1/D_out = 1/D_f,  M = -D_out/D_in,  D_in = D_f (M-1)/M.
// M = 1 makes D_in = 0; it is kept only as the lensless-limit flag.
struct TimeLensSpec {
  double focal_gdd = 0.0;      // ps^2
  double magnification = 0.0;  // M != 0
  double input_gdd = 0.0;      // ps^2
  double output_gdd = 0.0;     // ps^2
  double sync_offset = 0.0;    // ps, delta t between source and lens time axis
  double temporal_aperture = std::numeric_limits<double>::infinity();  // ps
  LensRealization realization = IdealLens{};

  bool unit_magnification() const { return magnification == 1.0; }
};

TimeLensSpec from_realization(const LensRealization& realization, double magnification,
                              double sync_offset_ps);

// Input-bandwidth window for faithful single-lens imaging:
//   lower:  sigma_o^4 >> M^2 / (4 D_f^2 (M-1)^2)      (Fraunhofer limit)
//   upper:  sigma_o   <  T_A M / (|D_f (M-1)|) / (8 ln 2)^(1/2) ... (aperture)
// ">>" is implemented as a configurable safety factor (default 10).
struct ApertureReport {
  double temporal_aperture = 0.0;     // ps
  double focal_gdd = 0.0;             // ps^2
  double magnification = 0.0;
  double sigma_lower_bound_pow4 = 0.0;  // rad^4/ps^4, lower bound on sigma_o^4
  double sigma_upper_bound = 0.0;       // rad/ps, upper bound on sigma_o
  double compatibility_margin = 0.0;    // T_A^4 M^2 / ((4 ln2)^2 D_f^2 (M-1)^2)
  double sigma_o = 0.0;                 // rad/ps, value under test
  double safety_factor = 10.0;
  bool lower_ok = false;  // sigma_o^4 >= safety * lower bound
  bool upper_ok = false;  // sigma_o < upper bound
  bool pass() const { return lower_ok && upper_ok; }
};

ApertureReport check_aperture(const TimeLensSpec& lens, double sigma_o, double safety_factor = 10.0);

// I_out(t) = I_o((t - t_delay)/M) / |M|; integral preserved, width |M| dt_o.
double post_lens_intensity(const SourceModel& model, const TimeLensSpec& lens, double t_ps);
double post_lens_delay(const SourceModel& model, const TimeLensSpec& lens);  // t_delay above
double post_lens_width(const SourceModel& model, const TimeLensSpec& lens);  // |M| dt_o, ps

// Closed-form JSA after the imaging stage (Gaussian model, synchronized lens).
// Requires lens.sync_offset == 0; the numeric transfer oracle handles offsets.
JsaGrid post_lens_jsa(const SourceModel& model, const TimeLensSpec& lens, const JsaGridSpec& spec);
cdouble post_lens_jsa_value(const SourceModel& model, const TimeLensSpec& lens, double omega_o,
                            double omega_e);

// Spectral width of the ordinary photon after the lens;
// -> sigma_o/|M| (= sigma_e at M_opt) as D_f -> infinity.
double post_lens_sigma_o(const SourceModel& model, const TimeLensSpec& lens);

// Magnification that symmetrizes |J_out| at finite focal GDD (suboptimal for
// visibility). Requires |D| > |T_e - T_o| (dimensionless), else DomainError.
double symmetric_magnification(const SourceModel& model, double focal_gdd_ps2);

// Frequency-domain transfer function of the stage for the ordinary photon,
//   G_o(W, Wbar) = sqrt(2 pi i D_f) exp(-i/2 M D_f (W - Wbar/M)^2
//                                       + i W tau2 + i Wbar tau1)
// with tau1 = -(t0 + tau_o + delta_t) fixed by source/lens synchronization and
// tau2 = t0 + delta_t + (k'_p + k'_o) L / 2 from the same bookkeeping.
cdouble lens_transfer(const SourceModel& model, const TimeLensSpec& lens, double omega_out,
                      double omega_in);
double lens_tau1(const SourceModel& model, const TimeLensSpec& lens);
double lens_tau2(const SourceModel& model, const TimeLensSpec& lens);

}  // namespace biphoton
