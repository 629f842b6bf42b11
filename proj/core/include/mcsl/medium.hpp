#ifndef MCSL_MEDIUM_HPP
#define MCSL_MEDIUM_HPP

#include <string>
#include <utility>
#include <vector>

#include "mcsl/types.hpp"

namespace mcsl {

enum class Direction { Forward, Backward };

/// Static parameters of one optical transition.
struct ChannelSpec {
  std::string label;
  Direction direction = Direction::Forward;
  double g = 0.0;         // photon-atom coupling constant
  double gamma = 0.0;     // optical coherence decay rate
  double delta = 0.0;     // control detuning
  double omega_opt = 0.0; // optical carrier frequency (energy bookkeeping only)

  void validate() const;
};

struct MediumSpec {
  double n_line = 0.0;  // effective line density (atomic density x beam cross section)
  double length = 0.0;  // medium length L
  double k0 = 0.0;      // ground-doublet wavevector offset
  double gamma12 = 0.0; // ground coherence decay
  double gamma2 = 0.0;  // envelope decay used by the closed-form Gaussian engine

  void validate() const;
};

/// Piecewise-constant control amplitudes with a constant phase per channel.
/// Value i holds on [t_i, t_{i+1}); the last value holds from the last
/// breakpoint on. Times before the first breakpoint are outside the domain.
class ControlSchedule {
 public:
  struct Channel {
    std::string label;
    double phase = 0.0;
    std::vector<double> breakpoints;
    std::vector<double> values;
  };

  void add_channel(Channel ch);

  double rabi(const std::string& label, double t) const;
  double phase(const std::string& label) const;
  cplx omega(const std::string& label, double t) const;  // Omega_o e^{i phi}
  bool has(const std::string& label) const;

  /// Latest first breakpoint over all channels; the common domain start.
  double start_time() const;

  /// Constant-coefficient intervals covering [t_a, t_b).
  std::vector<std::pair<double, double>> segments(double t_a, double t_b) const;

  const std::vector<Channel>& channels() const { return channels_; }

 private:
  const Channel& find(const std::string& label) const;
  std::vector<Channel> channels_;
};

/// Per-channel derived coefficients at one time slice.
struct ChannelCoeffs {
  std::string label;
  Direction direction = Direction::Forward;
  double rabi = 0.0;   // Omega_o(t)
  double phase = 0.0;  // phi
  double g = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double omega_opt = 0.0;
  cplx gamma_tilde;      // gamma - i*delta
  cplx xi;               // N g^2 / (c gamma_tilde)
  double xi0 = 0.0;      // N g^2 / (c gamma)
  cplx Gamma;            // Omega_o^2 / gamma_tilde
  double slowness = 0.0; // Omega_o^2 / g^2
  double v = 0.0;        // c Omega_o^2 / (N g^2)

  bool active() const { return rabi > 0.0; }
  bool forward() const { return direction == Direction::Forward; }
};

struct DerivedCoeffs {
  double t = 0.0;
  double n_line = 0.0;
  double gamma12 = 0.0;
  cplx mu;  // gamma12 + sum of per-channel Gamma
  std::vector<ChannelCoeffs> channels;

  int index_of(const std::string& label) const;
  const ChannelCoeffs& at(const std::string& label) const;
};

DerivedCoeffs derive_coefficients(const MediumSpec& medium,
                                  const std::vector<ChannelSpec>& channels,
                                  const ControlSchedule& schedule, double t);

struct DarkWeights {
  std::vector<cplx> field;  // (Omega_p / g_p) / sqrt(D), channel order
  double atomic = 0.0;      // -sqrt(n_line / D)
};

DarkWeights dark_weights(const MediumSpec& medium,
                         const std::vector<ChannelSpec>& channels,
                         const ControlSchedule& schedule, double t);

}  // namespace mcsl

#endif
