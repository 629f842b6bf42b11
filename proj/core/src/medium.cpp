#include "mcsl/medium.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace mcsl {

void ChannelSpec::validate() const {
  if (label.empty()) throw std::invalid_argument("channel label must be non-empty");
  if (!(g > 0.0)) throw std::invalid_argument("channel '" + label + "': g must be > 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("channel '" + label + "': gamma must be > 0");
  if (!(omega_opt > 0.0)) throw std::invalid_argument("channel '" + label + "': omega_opt must be > 0");
  if (!std::isfinite(delta)) throw std::invalid_argument("channel '" + label + "': delta must be finite");
}

void MediumSpec::validate() const {
  if (!(n_line > 0.0)) throw std::invalid_argument("medium: n_line must be > 0");
  if (!(length > 0.0)) throw std::invalid_argument("medium: length must be > 0");
  if (gamma12 < 0.0) throw std::invalid_argument("medium: gamma12 must be >= 0");
  if (gamma2 < 0.0) throw std::invalid_argument("medium: gamma2 must be >= 0");
  if (k0 < 0.0) throw std::invalid_argument("medium: k0 must be >= 0");
}

void ControlSchedule::add_channel(Channel ch) {
  if (ch.breakpoints.empty())
    throw std::invalid_argument("schedule '" + ch.label + "': needs at least one breakpoint");
  if (ch.breakpoints.size() != ch.values.size())
    throw std::invalid_argument("schedule '" + ch.label + "': breakpoints/values size mismatch");
  for (size_t i = 1; i < ch.breakpoints.size(); ++i)
    if (!(ch.breakpoints[i] > ch.breakpoints[i - 1]))
      throw std::invalid_argument("schedule '" + ch.label + "': breakpoints must be strictly increasing");
  for (double v : ch.values)
    if (v < 0.0 || !std::isfinite(v))
      throw std::invalid_argument("schedule '" + ch.label + "': Rabi amplitudes must be >= 0");
  if (has(ch.label))
    throw std::invalid_argument("schedule '" + ch.label + "': duplicate channel");
  channels_.push_back(std::move(ch));
}

bool ControlSchedule::has(const std::string& label) const {
  for (const auto& ch : channels_)
    if (ch.label == label) return true;
  return false;
}

const ControlSchedule::Channel& ControlSchedule::find(const std::string& label) const {
  for (const auto& ch : channels_)
    if (ch.label == label) return ch;
  throw std::out_of_range("schedule: unknown channel label '" + label + "'");
}

double ControlSchedule::rabi(const std::string& label, double t) const {
  const Channel& ch = find(label);
  if (t < ch.breakpoints.front())
    throw std::out_of_range("schedule '" + label + "': t=" + std::to_string(t) +
                            " precedes the first breakpoint");
  auto it = std::upper_bound(ch.breakpoints.begin(), ch.breakpoints.end(), t);
  return ch.values[static_cast<size_t>(it - ch.breakpoints.begin()) - 1];
}

double ControlSchedule::phase(const std::string& label) const { return find(label).phase; }

cplx ControlSchedule::omega(const std::string& label, double t) const {
  return rabi(label, t) * std::exp(iu * phase(label));
}

double ControlSchedule::start_time() const {
  if (channels_.empty()) throw std::logic_error("schedule has no channels");
  double t = channels_.front().breakpoints.front();
  for (const auto& ch : channels_) t = std::max(t, ch.breakpoints.front());
  return t;
}

std::vector<std::pair<double, double>> ControlSchedule::segments(double t_a, double t_b) const {
  if (t_b < t_a) throw std::invalid_argument("schedule segments: t_b < t_a");
  std::set<double> cuts{t_a, t_b};
  for (const auto& ch : channels_)
    for (double bp : ch.breakpoints)
      if (bp > t_a && bp < t_b) cuts.insert(bp);
  std::vector<std::pair<double, double>> out;
  for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it)
    out.emplace_back(*it, *std::next(it));
  return out;
}

int DerivedCoeffs::index_of(const std::string& label) const {
  for (size_t i = 0; i < channels.size(); ++i)
    if (channels[i].label == label) return static_cast<int>(i);
  throw std::out_of_range("unknown channel label '" + label + "'");
}

const ChannelCoeffs& DerivedCoeffs::at(const std::string& label) const {
  return channels[static_cast<size_t>(index_of(label))];
}

DerivedCoeffs derive_coefficients(const MediumSpec& medium,
                                  const std::vector<ChannelSpec>& channels,
                                  const ControlSchedule& schedule, double t) {
  medium.validate();
  DerivedCoeffs out;
  out.t = t;
  out.n_line = medium.n_line;
  out.gamma12 = medium.gamma12;
  out.mu = medium.gamma12;
  out.channels.reserve(channels.size());
  for (const auto& spec : channels) {
    spec.validate();
    ChannelCoeffs c;
    c.label = spec.label;
    c.direction = spec.direction;
    c.g = spec.g;
    c.gamma = spec.gamma;
    c.delta = spec.delta;
    c.omega_opt = spec.omega_opt;
    c.rabi = schedule.rabi(spec.label, t);
    c.phase = schedule.phase(spec.label);
    c.gamma_tilde = cplx(spec.gamma, -spec.delta);
    const double ng2 = medium.n_line * sq(spec.g);
    c.xi = ng2 / (c_light * c.gamma_tilde);
    c.xi0 = ng2 / (c_light * spec.gamma);
    c.Gamma = sq(c.rabi) / c.gamma_tilde;
    c.slowness = sq(c.rabi / spec.g);
    c.v = c_light * c.slowness / medium.n_line;
    out.mu += c.Gamma;
    out.channels.push_back(std::move(c));
  }
  return out;
}

DarkWeights dark_weights(const MediumSpec& medium,
                         const std::vector<ChannelSpec>& channels,
                         const ControlSchedule& schedule, double t) {
  double D = medium.n_line;
  std::vector<cplx> ratio;
  ratio.reserve(channels.size());
  for (const auto& spec : channels) {
    cplx r = schedule.omega(spec.label, t) / spec.g;
    D += std::norm(r);
    ratio.push_back(r);
  }
  if (!(D > 0.0)) throw std::domain_error("dark weights are degenerate: D = 0");
  DarkWeights w;
  const double root = std::sqrt(D);
  for (const auto& r : ratio) w.field.push_back(r / root);
  w.atomic = -std::sqrt(medium.n_line) / root;
  return w;
}

}  // namespace mcsl
