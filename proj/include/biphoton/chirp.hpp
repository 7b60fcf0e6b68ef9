#pragma once

#include <limits>

namespace biphoton {

// Gaussian pulse with a quadratic temporal phase,
//   Y(t) ~ exp(-t^2 / 4 dt^2 - i t^2 / 2 chirp).
// chirp = +inf encodes a transform-limited pulse. The spectral width sigma is
// invariant under quadratic dispersion; sigma * dt = 1/2 holds exactly for a
// transform-limited pulse and sigma * dt > 1/2 otherwise.
struct ChirpedPulse {
  double delta_t = 0.0;  // ps, intensity standard deviation
  double chirp = std::numeric_limits<double>::infinity();  // ps^2
  double sigma = 0.0;  // rad/ps, intensity spectral standard deviation

  // Accumulated GDD relative to the transform-limited pulse of the same spectrum.
  double accumulated_gdd() const;
  // Width of the underlying transform-limited pulse, 1/(2 sigma).
  double transform_limited_width() const;
};

ChirpedPulse transform_limited_pulse(double delta_t_ps);

// Propagation through quadratic dispersion of group delay dispersion `gdd`:
// sigma unchanged, dt and chirp follow the accumulated-GDD composition rule,
//   dt_out = sqrt(dt0^2 + (D_acc + gdd)^2 / 4 dt0^2).
ChirpedPulse propagate_chirped(const ChirpedPulse& pulse, double gdd_ps2);

struct FraunhoferReport {
  bool ok = false;
  double margin = 0.0;     // lhs / (safety * rhs); ok iff margin > 1
  double lhs = 0.0;        // (D1+D2)^2
  double threshold = 0.0;  // 1 / 4 sigma^4, chirp-aware form
};

// Fraunhofer dispersion criterion for total accumulated GDD `gdd_total`:
//   gdd_total^2 > safety / (4 sigma^4)
// where 1/(4 sigma^4) = 4 dt^4 (1 + 4 dt^4 / chirp^2)^-2 for the given pulse.
FraunhoferReport fraunhofer_ok(const ChirpedPulse& pulse, double gdd_total_ps2, double safety);

}  // namespace biphoton
