#include "mcsl/dispersion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mcsl {

namespace {

constexpr double kStoppingRelTol = 1e-9;

double abs_slowness_scale(const DerivedCoeffs& coeffs) {
  double s = 0.0;
  for (const auto& ch : coeffs.channels) s += ch.slowness;
  return s;
}

void require_stationary(const DerivedCoeffs& coeffs) {
  const double scale = abs_slowness_scale(coeffs);
  if (std::abs(stopping_residual(coeffs)) > kStoppingRelTol * scale)
    throw std::domain_error("stationary dispersion mode requires the stopping condition");
}

}  // namespace

cplx eta_forward(cplx xi_inv_p, cplx xi_inv_l, double k, double k0) {
  const double km = k - k0;
  return (xi_inv_l - xi_inv_p) * km / (1.0 + iu * xi_inv_p * km);
}

cplx eta_backward(cplx xi_inv_p, cplx xi_inv_l, double k, double k0) {
  return (xi_inv_l * (k - k0) + xi_inv_p * (k + k0)) / (1.0 - iu * xi_inv_p * (k + k0));
}

cplx eta_channel(const ChannelCoeffs& ch, cplx xi_l, double k, double k0) {
  const cplx xi_inv_p = 1.0 / ch.xi;
  const cplx xi_inv_l = 1.0 / xi_l;
  return ch.forward() ? eta_forward(xi_inv_p, xi_inv_l, k, k0)
                      : eta_backward(xi_inv_p, xi_inv_l, k, k0);
}

cplx beta_sum(const DerivedCoeffs& coeffs, cplx xi_l, double k, double k0) {
  cplx beta = 0.0;
  for (const auto& ch : coeffs.channels) {
    if (!ch.active()) continue;
    beta += ch.Gamma * eta_channel(ch, xi_l, k, k0);
  }
  return beta;
}

cplx dispersion_relation(const DerivedCoeffs& coeffs, cplx xi_l, double k, double k0) {
  if (coeffs.mu == cplx(0.0))
    throw std::domain_error("dispersion relation undefined: mu = 0 (no active controls, gamma12 = 0)");
  const cplx beta = beta_sum(coeffs, xi_l, k, k0);
  return ((k - k0) * coeffs.mu / xi_l - beta) / (1.0 + iu * beta / coeffs.mu);
}

double stopping_residual(const DerivedCoeffs& coeffs) {
  double sum = 0.0;
  for (const auto& ch : coeffs.channels)
    sum += ch.forward() ? ch.slowness : -ch.slowness;
  return sum;
}

double group_velocity(const DerivedCoeffs& coeffs) {
  return c_light * stopping_residual(coeffs) / coeffs.n_line;
}

cplx second_order_dispersion(const DerivedCoeffs& coeffs, cplx xi_l, DispersionMode mode) {
  (void)xi_l;
  const auto& chs = coeffs.channels;
  int n_active = 0;
  for (const auto& ch : chs) n_active += ch.active() ? 1 : 0;
  if (n_active < 2 &&
      (mode == DispersionMode::General || mode == DispersionMode::TravelingOptimal))
    return cplx(0.0);  // pair sums vanish with fewer than two active channels
  switch (mode) {
    case DispersionMode::General: {
      // Unordered pair sum; equals the k^2 Taylor coefficient of the
      // dispersion relation (checked against finite differences in tests).
      cplx sum = 0.0;
      for (size_t p = 0; p < chs.size(); ++p) {
        if (!chs[p].active()) continue;
        const cplx up = (chs[p].forward() ? 1.0 : -1.0) / chs[p].xi;
        for (size_t q = p + 1; q < chs.size(); ++q) {
          if (!chs[q].active()) continue;
          const cplx uq = (chs[q].forward() ? 1.0 : -1.0) / chs[q].xi;
          sum += chs[p].Gamma * chs[q].Gamma * sq(up - uq);
        }
      }
      return 2.0 * sum / coeffs.mu;
    }
    case DispersionMode::TravelingOptimal: {
      for (const auto& ch : chs)
        if (ch.active() && !ch.forward())
          throw std::domain_error("traveling dispersion mode requires forward-only controls");
      cplx sum = 0.0;
      for (size_t p = 0; p < chs.size(); ++p) {
        if (!chs[p].active()) continue;
        for (size_t q = p + 1; q < chs.size(); ++q) {
          if (!chs[q].active()) continue;
          sum += chs[p].Gamma * chs[q].Gamma * sq(1.0 / chs[p].xi0 - 1.0 / chs[q].xi0);
        }
      }
      return 2.0 * sum / coeffs.mu;
    }
    case DispersionMode::Stationary: {
      require_stationary(coeffs);
      cplx sum = 0.0;
      for (const auto& ch : chs)
        if (ch.active()) sum += ch.v / ch.xi;
      return 2.0 * sum;
    }
    case DispersionMode::StationaryOptimal: {
      require_stationary(coeffs);
      double sum = 0.0;
      for (const auto& ch : chs)
        if (ch.active()) sum += ch.v / ch.xi0;
      return cplx(2.0 * sum, 0.0);
    }
  }
  throw std::logic_error("unreachable dispersion mode");
}

std::vector<double> optimal_detunings(const std::vector<ChannelSpec>& channels,
                                      const std::string& probe_label, double delta_l) {
  const ChannelSpec* probe = nullptr;
  for (const auto& ch : channels)
    if (ch.label == probe_label) probe = &ch;
  if (!probe) throw std::out_of_range("optimal_detunings: unknown probe label '" + probe_label + "'");
  if (probe->direction != Direction::Forward)
    throw std::invalid_argument("optimal_detunings: probe channel must be forward");
  std::vector<double> out;
  out.reserve(channels.size());
  const double gl2 = sq(probe->g);
  for (const auto& ch : channels) {
    const double d = delta_l * sq(ch.g) / gl2;
    out.push_back(ch.direction == Direction::Forward ? d : -d);
  }
  return out;
}

double spreading_time(double l0, const DerivedCoeffs& coeffs) {
  if (l0 < 0.0) throw std::invalid_argument("spreading_time: l0 must be >= 0");
  double denom = 0.0;
  for (const auto& ch : coeffs.channels)
    if (ch.active()) denom += 2.0 * ch.v / ch.xi0;
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  return sq(l0) / denom;
}

DispersionReport dispersion_report(const DerivedCoeffs& coeffs, cplx xi_l, double k0,
                                   double k_max, int n_samples, double l0) {
  if (n_samples < 2) throw std::invalid_argument("dispersion_report: need at least 2 samples");
  DispersionReport rep;
  rep.v = group_velocity(coeffs);
  rep.d2 = second_order_dispersion(coeffs, xi_l, DispersionMode::General);
  rep.stopping = stopping_residual(coeffs);
  rep.spreading = spreading_time(l0, coeffs);
  rep.k.reserve(static_cast<size_t>(n_samples));
  rep.omega.reserve(static_cast<size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double k = -k_max + 2.0 * k_max * i / (n_samples - 1);
    rep.k.push_back(k);
    rep.omega.push_back(dispersion_relation(coeffs, xi_l, k, k0));
  }
  return rep;
}

}  // namespace mcsl
