#include "biphoton/chirp.hpp"

#include <cmath>

#include "biphoton/errors.hpp"

namespace biphoton {

double ChirpedPulse::transform_limited_width() const { return 0.5 / sigma; }

double ChirpedPulse::accumulated_gdd() const {
  if (!std::isfinite(chirp)) return 0.0;
  const double dt4 = std::pow(delta_t, 4);
  return chirp / (1.0 + chirp * chirp / (4.0 * dt4));
}

ChirpedPulse transform_limited_pulse(double delta_t_ps) {
  if (!(delta_t_ps > 0.0)) throw DomainError("pulse width must be positive");
  ChirpedPulse p;
  p.delta_t = delta_t_ps;
  p.sigma = 0.5 / delta_t_ps;
  return p;
}

ChirpedPulse propagate_chirped(const ChirpedPulse& pulse, double gdd_ps2) {
  if (!(pulse.delta_t > 0.0) || !(pulse.sigma > 0.0))
    throw DomainError("invalid chirped pulse");
  const double dt0 = pulse.transform_limited_width();
  const double d_total = pulse.accumulated_gdd() + gdd_ps2;
  ChirpedPulse out;
  out.sigma = pulse.sigma;  // quadratic dispersion leaves the spectrum unchanged
  out.delta_t = std::sqrt(dt0 * dt0 + d_total * d_total / (4.0 * dt0 * dt0));
  out.chirp = (d_total == 0.0) ? std::numeric_limits<double>::infinity()
                               : d_total + 4.0 * std::pow(dt0, 4) / d_total;
  return out;
}

FraunhoferReport fraunhofer_ok(const ChirpedPulse& pulse, double gdd_total_ps2, double safety) {
  if (!(safety >= 1.0)) throw DomainError("Fraunhofer safety factor must be >= 1");
  FraunhoferReport r;
  // 1/(4 sigma^4) written through (delta_t, chirp); identical to the spectral
  // form because sigma is dispersion-invariant.
  const double dt4 = std::pow(pulse.delta_t, 4);
  double denom;
  if (std::isfinite(pulse.chirp)) {
    const double g = 1.0 + 4.0 * dt4 / (pulse.chirp * pulse.chirp);
    denom = 4.0 * dt4 / (g * g);
  } else {
    denom = 4.0 * dt4;
  }
  r.threshold = denom;
  r.lhs = gdd_total_ps2 * gdd_total_ps2;
  r.margin = r.lhs / (safety * r.threshold);
  r.ok = r.margin > 1.0;
  return r;
}

}  // namespace biphoton
