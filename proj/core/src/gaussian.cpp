#include "mcsl/gaussian.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "mcsl/dispersion.hpp"

namespace mcsl {

namespace {

constexpr double kWidthImagTol = 1e-2;
constexpr double kStoppingRelTol = 1e-9;

struct Accumulated {
  double drift = 0.0;
  cplx spread = 0.0;
};

Accumulated accumulate(const GaussianPulseSpec& pulse, const MediumSpec& medium,
                       const std::vector<ChannelSpec>& channels,
                       const ControlSchedule& schedule, double t0, double t) {
  Accumulated acc;
  for (const auto& [ta, tb] : schedule.segments(t0, t)) {
    const DerivedCoeffs coeffs = derive_coefficients(medium, channels, schedule, ta);
    const double dt = tb - ta;
    acc.drift += group_velocity(coeffs) * dt;
    const cplx xi_l = coeffs.at(pulse.label).xi;
    acc.spread += second_order_dispersion(coeffs, xi_l, DispersionMode::General) * dt;
  }
  return acc;
}

double real_width_sq(cplx w2, const std::string& label) {
  if (std::abs(w2.imag()) > kWidthImagTol * std::abs(w2.real()) || !(w2.real() > 0.0))
    throw std::domain_error("channel '" + label +
                            "': detunings give a complex evolved width; "
                            "use the spectral propagator for this regime");
  return w2.real();
}

}  // namespace

const GaussianChannelReport& GaussianReport::at(const std::string& label) const {
  for (const auto& ch : channels)
    if (ch.label == label) return ch;
  throw std::out_of_range("gaussian report: unknown channel '" + label + "'");
}

GaussianReport evolve_gaussian(const GaussianPulseSpec& pulse, const MediumSpec& medium,
                               const std::vector<ChannelSpec>& channels,
                               const ControlSchedule& schedule, double t0, double t) {
  pulse.validate();
  medium.validate();
  if (t < t0) throw std::invalid_argument("evolve_gaussian: t precedes t0");

  const Accumulated acc = accumulate(pulse, medium, channels, schedule, t0, t);
  const DerivedCoeffs coeffs = derive_coefficients(medium, channels, schedule, t);

  int n_active = 0;
  for (const auto& ch : coeffs.channels) n_active += ch.active() ? 1 : 0;
  if (n_active == 0)
    throw std::domain_error("evolve_gaussian: no active control field at t");

  const ChannelCoeffs& probe = coeffs.at(pulse.label);
  const cplx xi_l_inv = 1.0 / probe.xi;
  if (std::abs(probe.xi) * pulse.l0 < 10.0)
    std::cerr << "warning: gaussian engine outside the dense-medium regime"
                 " (|xi_l| l0 < 10)\n";

  const double v = group_velocity(coeffs);
  const cplx v_over_mu = v / coeffs.mu;

  cplx B = 0.0;
  for (const auto& ch : coeffs.channels)
    if (ch.active()) B += ch.v / ch.xi;
  B = 2.0 * (B - v * xi_l_inv) / coeffs.mu;

  const cplx shift_l = v_over_mu - xi_l_inv;
  const double decay = std::exp(-medium.gamma2 * (t - t0));
  const double amp0 = pulse.peak_amplitude();
  const double base_center = pulse.v_l * t0 - pulse.z0 + acc.drift;
  const double omega_l0 = schedule.rabi(pulse.label, t0);

  GaussianReport rep;
  rep.t0 = t0;
  rep.t = t;
  rep.drift = acc.drift;
  rep.spread = acc.spread;
  rep.B = B;

  for (const auto& ch : coeffs.channels) {
    GaussianChannelReport r;
    r.label = ch.label;
    r.active = ch.active();
    const cplx xi_inv = 1.0 / ch.xi;
    if (ch.forward()) {
      r.shift = v_over_mu - xi_inv;
      r.dl2 = r.shift * (r.shift - 2.0 * shift_l) + 2.0 * xi_inv * (xi_l_inv - xi_inv) + B;
    } else {
      r.shift = v_over_mu + xi_inv;
      r.dl2 = r.shift * (r.shift - 2.0 * shift_l) - 2.0 * xi_inv * (xi_l_inv + xi_inv) + B;
    }
    const cplx w2 = sq(pulse.l0) - r.dl2 + acc.spread;
    r.width = std::sqrt(real_width_sq(w2, ch.label));
    r.center = base_center - r.shift.real();
    r.peak_psi = std::sqrt(c_light / pulse.v_l) * (pulse.l0 / r.width) * amp0 * decay;
    r.peak_amp = ch.active() ? (ch.rabi * probe.g / (omega_l0 * ch.g)) *
                                   (pulse.l0 / r.width) * amp0 * decay
                             : 0.0;
    r.phase = pulse.theta + ch.phase - probe.phase;
    rep.channels.push_back(std::move(r));
  }

  rep.polariton_number =
      (pulse.l0 / rep.at(pulse.label).width) * sq(std::abs(pulse.a)) * sq(decay);
  return rep;
}

std::vector<PeakAmplitude> stationary_amplitudes(const GaussianPulseSpec& pulse,
                                                 const MediumSpec& medium,
                                                 const std::vector<ChannelSpec>& channels,
                                                 const ControlSchedule& schedule,
                                                 double t0, double t) {
  const DerivedCoeffs coeffs = derive_coefficients(medium, channels, schedule, t);
  double scale = 0.0;
  for (const auto& ch : coeffs.channels) scale += ch.slowness;
  if (std::abs(stopping_residual(coeffs)) > kStoppingRelTol * scale)
    throw std::domain_error("stationary_amplitudes: stopping condition violated at t");

  const GaussianReport rep = evolve_gaussian(pulse, medium, channels, schedule, t0, t);
  std::vector<PeakAmplitude> out;
  out.reserve(rep.channels.size());
  for (const auto& ch : rep.channels)
    out.push_back({ch.label, ch.peak_amp, ch.phase});
  return out;
}

EmittedReport emitted_pulse_and_energies(const GaussianPulseSpec& pulse,
                                         const MediumSpec& medium,
                                         const std::vector<ChannelSpec>& channels,
                                         const ControlSchedule& schedule,
                                         double t0, double t_out) {
  const DerivedCoeffs coeffs = derive_coefficients(medium, channels, schedule, t_out);
  double v_travel = 0.0;
  int n_forward = 0;
  for (const auto& ch : coeffs.channels) {
    if (!ch.active()) continue;
    if (!ch.forward())
      throw std::domain_error("emitted_pulse_and_energies: backward control active at t_out;"
                              " traveling release requires forward-only controls");
    v_travel += ch.v;
    ++n_forward;
  }
  if (n_forward == 0)
    throw std::domain_error("emitted_pulse_and_energies: no active forward channel at t_out");

  const GaussianReport rep = evolve_gaussian(pulse, medium, channels, schedule, t0, t_out);
  const ChannelCoeffs& probe = coeffs.at(pulse.label);
  const double omega_l = probe.omega_opt;
  const double decay2 = std::exp(-2.0 * medium.gamma2 * (t_out - t0));
  const double decay = std::sqrt(decay2);
  const double l_out = std::sqrt(sq(pulse.l0) + rep.spread.real());
  const double amp0 = pulse.peak_amplitude();

  EmittedReport out;
  out.t_out = t_out;
  out.input_energy = omega_l * sq(std::abs(pulse.a));  // hbar = 1
  out.width_out = l_out;
  out.v_travel = v_travel;

  double mean_omega = 0.0;
  for (const auto& ch : coeffs.channels) {
    if (!ch.active()) continue;
    mean_omega += ch.omega_opt * ch.v / v_travel;
    EmittedChannel e;
    e.label = ch.label;
    e.duration = rep.at(ch.label).width / v_travel;
    e.energy = out.input_energy * (ch.omega_opt / omega_l) * (ch.v / v_travel) *
               (pulse.l0 / l_out) * decay2;
    e.peak_out = std::sqrt(ch.v / pulse.v_l) * (pulse.l0 / rep.at(ch.label).width) *
                 amp0 * decay;
    out.channels.push_back(std::move(e));
  }
  out.mean_frequency = mean_omega;
  out.total_energy =
      out.input_energy * (mean_omega / omega_l) * (pulse.l0 / l_out) * decay2;
  return out;
}

double polariton_number(const GaussianPulseSpec& pulse, const MediumSpec& medium,
                        const std::vector<ChannelSpec>& channels,
                        const ControlSchedule& schedule, double t0, double t) {
  return evolve_gaussian(pulse, medium, channels, schedule, t0, t).polariton_number;
}

}  // namespace mcsl
