#include "mcsl/pulse.hpp"

#include <cmath>
#include <stdexcept>

namespace mcsl {

double GaussianPulseSpec::peak_amplitude() const {
  return std::abs(a) / std::sqrt(std::sqrt(pi) * c_light * delta_t0);
}

void GaussianPulseSpec::validate() const {
  if (label.empty()) throw std::invalid_argument("pulse: probe label must be non-empty");
  if (!(l0 > 0.0)) throw std::invalid_argument("pulse: l0 must be > 0");
  if (!(v_l > 0.0)) throw std::invalid_argument("pulse: probe group velocity must be > 0");
  if (!(delta_t0 > 0.0) || std::abs(l0 - v_l * delta_t0) > 1e-9 * l0)
    throw std::invalid_argument("pulse: delta_t0 must equal l0 / v_l");
}

GaussianPulseSpec GaussianPulseSpec::from_center(std::string label, double a, double l0,
                                                 double center, double theta, double v_l,
                                                 double t0) {
  GaussianPulseSpec p;
  p.label = std::move(label);
  p.a = a;
  p.l0 = l0;
  p.theta = theta;
  p.v_l = v_l;
  p.z0 = v_l * t0 - center;
  p.delta_t0 = v_l > 0.0 ? l0 / v_l : 0.0;
  return p;
}

}  // namespace mcsl
