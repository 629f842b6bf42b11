#ifndef MCSL_TESTS_BUILDERS_HPP
#define MCSL_TESTS_BUILDERS_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mcsl/medium.hpp"

namespace mcsl_tests {

inline mcsl::ChannelSpec channel(std::string label, mcsl::Direction dir, double g,
                                 double gamma, double delta = 0.0,
                                 double omega_opt = 1.0) {
  mcsl::ChannelSpec ch;
  ch.label = std::move(label);
  ch.direction = dir;
  ch.g = g;
  ch.gamma = gamma;
  ch.delta = delta;
  ch.omega_opt = omega_opt;
  return ch;
}

inline mcsl::ChannelSpec fwd(std::string label, double g, double gamma,
                             double delta = 0.0, double omega_opt = 1.0) {
  return channel(std::move(label), mcsl::Direction::Forward, g, gamma, delta, omega_opt);
}

inline mcsl::ChannelSpec bwd(std::string label, double g, double gamma,
                             double delta = 0.0, double omega_opt = 1.0) {
  return channel(std::move(label), mcsl::Direction::Backward, g, gamma, delta, omega_opt);
}

/// Schedule channel from (t, value) pairs.
inline mcsl::ControlSchedule::Channel steps(
    std::string label, std::initializer_list<std::pair<double, double>> pts,
    double phase = 0.0) {
  mcsl::ControlSchedule::Channel ch;
  ch.label = std::move(label);
  ch.phase = phase;
  for (const auto& [t, v] : pts) {
    ch.breakpoints.push_back(t);
    ch.values.push_back(v);
  }
  return ch;
}

inline mcsl::ControlSchedule schedule(
    std::initializer_list<mcsl::ControlSchedule::Channel> chs) {
  mcsl::ControlSchedule s;
  for (const auto& ch : chs) s.add_channel(ch);
  return s;
}

/// Linear ramp of a control between two levels approximated by fine steps.
inline void append_ramp(mcsl::ControlSchedule::Channel& ch, double t_from, double t_to,
                        double v_from, double v_to, int n_steps) {
  for (int i = 1; i <= n_steps; ++i) {
    const double f = static_cast<double>(i) / n_steps;
    ch.breakpoints.push_back(t_from + (t_to - t_from) * (i - 1) / double(n_steps));
    ch.values.push_back(v_from + (v_to - v_from) * f);
  }
  ch.breakpoints.push_back(t_to);
  ch.values.push_back(v_to);
}

inline mcsl::MediumSpec medium(double n_line, double length, double gamma12 = 0.0,
                               double gamma2 = 0.0, double k0 = 0.0) {
  mcsl::MediumSpec m;
  m.n_line = n_line;
  m.length = length;
  m.gamma12 = gamma12;
  m.gamma2 = gamma2;
  m.k0 = k0;
  return m;
}

}  // namespace mcsl_tests

#endif
