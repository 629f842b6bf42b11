#ifndef MCSL_PULSE_HPP
#define MCSL_PULSE_HPP

#include <string>

#include "mcsl/types.hpp"

namespace mcsl {

/// Gaussian probe pulse launched on the designated forward channel.
/// Position bookkeeping: the envelope center at time t0 is v_l*t0 - z0.
struct GaussianPulseSpec {
  std::string label;
  double a = 1.0;        // coherent amplitude; |a|^2 = mean polariton number
  double l0 = 0.0;       // initial spatial width
  double z0 = 0.0;       // position parameter
  double theta = 0.0;    // constant phase
  double v_l = 0.0;      // group velocity at init time
  double delta_t0 = 0.0; // l0 / v_l

  double center_at(double t0) const { return v_l * t0 - z0; }
  double peak_amplitude() const;  // (sqrt(pi) c delta_t0)^{-1/2} |a|

  void validate() const;

  static GaussianPulseSpec from_center(std::string label, double a, double l0,
                                       double center, double theta, double v_l,
                                       double t0);
};

}  // namespace mcsl

#endif
