#include "mcsl/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "mcsl/dispersion.hpp"

namespace mcsl {

namespace {

void require_active_controls(const DerivedCoeffs& coeffs) {
  for (const auto& ch : coeffs.channels)
    if (ch.active()) return;
  throw std::domain_error("propagator: no active control field at t=" + std::to_string(coeffs.t));
}

double norm2(const std::vector<cplx>& f) {
  double s = 0.0;
  for (const auto& v : f) s += std::norm(v);
  return s;
}

// Edge fraction of |Psi_l|^2; used for the localization warning.
double boundary_fraction(const SpectralGrid& grid, const std::vector<cplx>& field) {
  const int n = grid.n();
  const int edge = std::max(1, n / 64);
  double total = 0.0, rim = 0.0;
  for (int j = 0; j < n; ++j) {
    const double w = std::norm(field[static_cast<size_t>(j)]);
    total += w;
    if (j < edge || j >= n - edge) rim += w;
  }
  return total > 0.0 ? rim / total : 0.0;
}

}  // namespace

cplx mode_projection(const DerivedCoeffs& coeffs, cplx xi_l, double k, double k0) {
  const cplx beta = beta_sum(coeffs, xi_l, k, k0);
  return 1.0 - coeffs.gamma12 / coeffs.mu + iu * beta / coeffs.mu;
}

cplx mode_frequency(const DerivedCoeffs& coeffs, cplx xi_l, double k, double k0) {
  const cplx beta = beta_sum(coeffs, xi_l, k, k0);
  const cplx I = 1.0 - coeffs.gamma12 / coeffs.mu + iu * beta / coeffs.mu;
  return (-iu * coeffs.gamma12 + coeffs.mu * (k - k0) / xi_l - beta) / I;
}

std::vector<cplx> MCState::spectrum() const {
  std::vector<cplx> out(grid.samples.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = grid.samples[i] * (I_t0[i] / I_t[i]) * std::exp(-iu * phase[i]);
  return out;
}

MCState init_probe(const GaussianPulseSpec& pulse, const MediumSpec& medium,
                   const std::vector<ChannelSpec>& channels,
                   const ControlSchedule& schedule, double t0, int n_k) {
  pulse.validate();
  medium.validate();

  MCState st;
  st.t0 = st.t = t0;
  st.k0 = medium.k0;
  st.probe_label = pulse.label;
  st.probe_phi = schedule.phase(pulse.label);
  st.grid = SpectralGrid(n_k, medium.length);

  const double center = pulse.center_at(t0);
  if (!(center - 4.0 * pulse.l0 > 0.0) || !(center + 4.0 * pulse.l0 < medium.length))
    throw std::invalid_argument("init_probe: pulse clipped by the medium boundary");
  if (pulse.l0 < 4.0 * st.grid.dz())
    throw std::invalid_argument("init_probe: pulse width unresolvable on the grid");
  if (st.grid.k_max() - std::abs(medium.k0) < 8.0 / pulse.l0)
    throw std::invalid_argument("init_probe: grid does not span 8/l0 around k0");

  const DerivedCoeffs coeffs = derive_coefficients(medium, channels, schedule, t0);
  require_active_controls(coeffs);
  const cplx xi_l = coeffs.at(pulse.label).xi;

  const double amp_norm = std::sqrt(pulse.l0 / std::sqrt(pi));
  const cplx phase0 = std::exp(iu * (pulse.theta - st.probe_phi));
  const int n = st.grid.n();
  st.phase.assign(static_cast<size_t>(n), cplx(0.0));
  st.I_t0.resize(static_cast<size_t>(n));
  st.I_t.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double k = st.grid.k(i);
    st.grid.samples[static_cast<size_t>(i)] =
        pulse.a * amp_norm * std::exp(-0.5 * sq(k * pulse.l0)) *
        std::exp(iu * k * (pulse.z0 - pulse.v_l * t0)) * phase0;
    st.I_t0[static_cast<size_t>(i)] = mode_projection(coeffs, xi_l, k, medium.k0);
    st.I_t[static_cast<size_t>(i)] = st.I_t0[static_cast<size_t>(i)];
  }
  return st;
}

MCState evolve(MCState state, const MediumSpec& medium,
               const std::vector<ChannelSpec>& channels,
               const ControlSchedule& schedule, double t_target) {
  if (t_target < state.t)
    throw std::invalid_argument("evolve: t_target precedes the state time");
  if (t_target == state.t) return state;

  const int n = state.grid.n();
  for (const auto& [ta, tb] : schedule.segments(state.t, t_target)) {
    const DerivedCoeffs coeffs = derive_coefficients(medium, channels, schedule, ta);
    require_active_controls(coeffs);
    const cplx xi_l = coeffs.at(state.probe_label).xi;
    const double dt = tb - ta;
    for (int i = 0; i < n; ++i) {
      const double k = state.grid.k(i);
      state.phase[static_cast<size_t>(i)] +=
          mode_frequency(coeffs, xi_l, k, state.k0) * dt;
    }
  }

  const DerivedCoeffs coeffs = derive_coefficients(medium, channels, schedule, t_target);
  require_active_controls(coeffs);
  const cplx xi_l = coeffs.at(state.probe_label).xi;
  for (int i = 0; i < n; ++i)
    state.I_t[static_cast<size_t>(i)] =
        mode_projection(coeffs, xi_l, state.grid.k(i), state.k0);
  state.t = t_target;

  const auto field = to_space(state.grid, state.spectrum());
  if (boundary_fraction(state.grid, field) > 1e-4) {
    if (!state.boundary_warning)
      std::cerr << "warning: envelope norm reaching the medium boundary at t=" << t_target
                << "\n";
    state.boundary_warning = true;
  }
  return state;
}

namespace {

// One-sided exponential accumulation of integral kernel * X with X treated
// as piecewise linear; exact per cell for linear X.
struct ExpCellWeights {
  cplx decay, w_near, w_far;  // w_far weighs the sample nearer the kernel tail
};

ExpCellWeights cell_weights(cplx q, double h) {
  ExpCellWeights w;
  const cplx qh = q * h;
  w.decay = std::exp(-qh);
  if (std::abs(qh) > 1e-4) {
    w.w_near = (qh - (1.0 - w.decay)) / (q * qh);
    w.w_far = (1.0 - w.decay * (1.0 + qh)) / (q * qh);
  } else {
    w.w_near = h * (0.5 - qh / 6.0 + qh * qh / 24.0);
    w.w_far = h * (0.5 - qh / 3.0 + qh * qh / 8.0);
  }
  return w;
}

}  // namespace

std::vector<std::vector<cplx>> synthesize(const MCState& state, const MediumSpec& medium,
                                          const std::vector<ChannelSpec>& channels,
                                          SynthesisMethod method) {
  const int n = state.grid.n();
  const double k0 = state.k0;
  const auto spectrum = state.spectrum();

  cplx xi_l;
  {
    bool found = false;
    for (const auto& ch : channels)
      if (ch.label == state.probe_label) {
        xi_l = medium.n_line * sq(ch.g) / (c_light * cplx(ch.gamma, -ch.delta));
        found = true;
      }
    if (!found) throw std::out_of_range("synthesize: probe channel missing from channel list");
  }

  std::vector<std::vector<cplx>> out;
  out.reserve(channels.size());

  if (method == SynthesisMethod::Spectral) {
    std::vector<cplx> scaled(static_cast<size_t>(n));
    for (const auto& ch : channels) {
      const cplx xi_p = medium.n_line * sq(ch.g) / (c_light * cplx(ch.gamma, -ch.delta));
      for (int i = 0; i < n; ++i) {
        const double k = state.grid.k(i);
        const cplx eta = ch.direction == Direction::Forward
                             ? eta_forward(1.0 / xi_p, 1.0 / xi_l, k, k0)
                             : eta_backward(1.0 / xi_p, 1.0 / xi_l, k, k0);
        scaled[static_cast<size_t>(i)] = (1.0 + iu * eta) * spectrum[static_cast<size_t>(i)];
      }
      out.push_back(to_space(state.grid, scaled));
    }
    return out;
  }

  // Kernel path: one-sided exponential convolution of the source profile
  // X = Psi_l + xi_l^{-1} (Psi_l' - i k0 Psi_l) in real space.
  const auto psi_l = to_space(state.grid, spectrum);
  const double h = state.grid.dz();
  {
    const double width = moments(psi_l, h).width;
    if (std::abs(xi_l) * width < 10.0)
      std::cerr << "warning: kernel synthesis outside the dense-medium regime"
                   " (|xi_l| * width < 10)\n";
  }
  std::vector<cplx> X(static_cast<size_t>(n));
  const cplx xi_l_inv = 1.0 / xi_l;
  for (int j = 0; j < n; ++j) {
    cplx d;
    if (j == 0)
      d = (psi_l[1] - psi_l[0]) / h;
    else if (j == n - 1)
      d = (psi_l[static_cast<size_t>(n - 1)] - psi_l[static_cast<size_t>(n - 2)]) / h;
    else
      d = (psi_l[static_cast<size_t>(j + 1)] - psi_l[static_cast<size_t>(j - 1)]) / (2.0 * h);
    X[static_cast<size_t>(j)] =
        psi_l[static_cast<size_t>(j)] +
        xi_l_inv * (d - iu * k0 * psi_l[static_cast<size_t>(j)]);
  }

  for (const auto& ch : channels) {
    const cplx xi_p = medium.n_line * sq(ch.g) / (c_light * cplx(ch.gamma, -ch.delta));
    const cplx q = xi_p - iu * k0;
    const auto w = cell_weights(q, h);
    std::vector<cplx> acc(static_cast<size_t>(n));
    if (ch.direction == Direction::Forward) {
      acc[0] = 0.0;
      for (int j = 1; j < n; ++j)
        acc[static_cast<size_t>(j)] = w.decay * acc[static_cast<size_t>(j - 1)] +
                                      w.w_far * X[static_cast<size_t>(j - 1)] +
                                      w.w_near * X[static_cast<size_t>(j)];
    } else {
      acc[static_cast<size_t>(n - 1)] = 0.0;
      for (int j = n - 2; j >= 0; --j)
        acc[static_cast<size_t>(j)] = w.decay * acc[static_cast<size_t>(j + 1)] +
                                      w.w_far * X[static_cast<size_t>(j + 1)] +
                                      w.w_near * X[static_cast<size_t>(j)];
    }
    for (auto& v : acc) v *= xi_p;
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<std::vector<cplx>> to_amplitudes(const MCState& state, const MediumSpec& medium,
                                             const std::vector<ChannelSpec>& channels,
                                             const ControlSchedule& schedule, double t) {
  auto envelopes = synthesize(state, medium, channels, SynthesisMethod::Spectral);
  for (size_t p = 0; p < channels.size(); ++p) {
    const cplx omega = schedule.omega(channels[p].label, t);
    const cplx scale = omega / std::sqrt(medium.n_line * sq(channels[p].g));
    for (auto& v : envelopes[p]) v *= scale;
  }
  return envelopes;
}

double dark_residual(const MCState& state, const MediumSpec& medium,
                     const std::vector<ChannelSpec>& channels,
                     const ControlSchedule& schedule) {
  std::vector<size_t> active;
  for (size_t p = 0; p < channels.size(); ++p)
    if (schedule.rabi(channels[p].label, state.t) > 0.0) active.push_back(p);
  if (active.size() < 2)
    throw std::domain_error("dark_residual: needs at least two active channels");

  const auto envelopes = synthesize(state, medium, channels, SynthesisMethod::Spectral);
  const int n = state.grid.n();
  std::vector<std::vector<cplx>> dephased;
  for (size_t p : active) {
    std::vector<cplx> f(static_cast<size_t>(n));
    const double sign = channels[p].direction == Direction::Forward ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) {
      const double z = j * state.grid.dz();
      f[static_cast<size_t>(j)] = envelopes[p][static_cast<size_t>(j)] *
                                  std::exp(iu * sign * state.k0 * z);
    }
    dephased.push_back(std::move(f));
  }

  double worst = 0.0;
  for (size_t i = 0; i < dephased.size(); ++i)
    for (size_t j = i + 1; j < dephased.size(); ++j) {
      double diff = 0.0;
      for (int m = 0; m < n; ++m)
        diff += std::norm(dephased[i][static_cast<size_t>(m)] -
                          dephased[j][static_cast<size_t>(m)]);
      const double ref = std::max(norm2(dephased[i]), norm2(dephased[j]));
      if (ref > 0.0) worst = std::max(worst, std::sqrt(diff / ref));
    }
  return worst;
}

Observables moments(const std::vector<cplx>& envelope, double dz, double z_first) {
  double norm = 0.0, zsum = 0.0;
  for (size_t j = 0; j < envelope.size(); ++j) {
    const double w = std::norm(envelope[j]);
    norm += w;
    zsum += w * (z_first + static_cast<double>(j) * dz);
  }
  if (norm <= 0.0) throw std::domain_error("moments: zero-norm envelope");
  const double centroid = zsum / norm;
  double spread = 0.0;
  for (size_t j = 0; j < envelope.size(); ++j)
    spread += std::norm(envelope[j]) * sq(z_first + static_cast<double>(j) * dz - centroid);
  Observables obs;
  obs.centroid = centroid;
  obs.width = std::sqrt(spread / norm);
  obs.polariton_number = norm * dz;
  return obs;
}

Observables observables(const MCState& state) {
  const auto field = to_space(state.grid, state.spectrum());
  return moments(field, state.grid.dz());
}

}  // namespace mcsl
