#include "mcsl/mboracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcsl/propagator.hpp"

namespace mcsl {

void MBGrid::validate(double length) const {
  if (n_z < 16) throw std::invalid_argument("mb grid: n_z too small");
  if (scheme != "shift-rk4")
    throw std::invalid_argument("mb grid: unknown scheme '" + scheme + "'");
  const double h = dz(length);
  if (dt != 0.0) {
    if (c_light * dt > h * (1.0 + 1e-12))
      throw std::invalid_argument("mb grid: CFL violation, c*dt must not exceed dz");
    if (std::abs(c_light * dt - h) > 1e-9 * h)
      throw std::invalid_argument("mb grid: shift transport needs c*dt = dz exactly");
  }
}

namespace {

struct SegmentParams {
  double gamma12 = 0.0;
  std::vector<cplx> gamma_tilde;  // per channel
  std::vector<cplx> omega;        // Omega_o e^{i phi}
  std::vector<double> g;
  std::vector<double> Ng;         // n_line * g
  std::vector<bool> forward;
};

SegmentParams segment_params(const MediumSpec& medium,
                             const std::vector<ChannelSpec>& channels,
                             const ControlSchedule& schedule, double t) {
  SegmentParams p;
  p.gamma12 = medium.gamma12;
  for (const auto& ch : channels) {
    p.gamma_tilde.push_back(cplx(ch.gamma, -ch.delta));
    p.omega.push_back(schedule.omega(ch.label, t));
    p.g.push_back(ch.g);
    p.Ng.push_back(medium.n_line * ch.g);
    p.forward.push_back(ch.direction == Direction::Forward);
  }
  return p;
}

// Work buffers holding the local (transport-free) degrees of freedom.
struct Fields {
  std::vector<std::vector<cplx>> A, sigma, sigma2;
  std::vector<cplx> p12;
  std::vector<double> p22;

  void resize_like(const Fields& other) {
    A.assign(other.A.size(), std::vector<cplx>(other.p12.size()));
    sigma.assign(other.sigma.size(), std::vector<cplx>(other.p12.size()));
    sigma2.assign(other.sigma2.size(), std::vector<cplx>(other.p12.size()));
    p12.assign(other.p12.size(), cplx(0.0));
    p22.assign(other.p22.size(), 0.0);
  }
};

class MBSim {
 public:
  MBSim(const MediumSpec& medium, const std::vector<ChannelSpec>& channels,
        const ControlSchedule& schedule, const GaussianPulseSpec& probe,
        const MBGrid& grid, const MBOptions& options)
      : medium_(medium), channels_(channels), schedule_(schedule), probe_(probe),
        options_(options), n_nodes_(grid.n_z + 1), dz_(grid.dz(medium.length)),
        dt_(grid.dt != 0.0 ? grid.dt : grid.dz(medium.length) / c_light) {
    if (options.full_mode && medium.k0 != 0.0)
      throw std::invalid_argument("mb full mode supports k0 = 0 only");
    probe_index_ = -1;
    for (size_t p = 0; p < channels.size(); ++p)
      if (channels[p].label == probe.label) probe_index_ = static_cast<int>(p);
    if (probe_index_ < 0) throw std::out_of_range("mb: probe label not in channel list");
    if (channels[static_cast<size_t>(probe_index_)].direction != Direction::Forward)
      throw std::invalid_argument("mb: probe channel must be forward");

    state_.A.assign(channels.size(), std::vector<cplx>(static_cast<size_t>(n_nodes_)));
    state_.sigma.assign(channels.size(), std::vector<cplx>(static_cast<size_t>(n_nodes_)));
    state_.p12.assign(static_cast<size_t>(n_nodes_), cplx(0.0));
    if (options.full_mode) {
      state_.sigma2.assign(channels.size(), std::vector<cplx>(static_cast<size_t>(n_nodes_)));
      state_.p22.assign(static_cast<size_t>(n_nodes_), 0.0);
    }
    for (int s = 0; s < 4; ++s) scratch_[s].resize_like(state_);
    stage_.resize_like(state_);
  }

  double dt() const { return dt_; }
  double dz() const { return dz_; }

  void init_manifold(double t) {
    int active = -1;
    for (size_t p = 0; p < channels_.size(); ++p)
      if (schedule_.rabi(channels_[p].label, t) > 0.0) {
        if (active >= 0)
          throw std::invalid_argument("mb manifold init needs a single active channel");
        active = static_cast<int>(p);
      }
    if (active != probe_index_)
      throw std::invalid_argument("mb manifold init: probe control must be the active one");

    const DerivedCoeffs coeffs = derive_coefficients(medium_, channels_, schedule_, t);
    const ChannelCoeffs& pc = coeffs.at(probe_.label);
    const double center = probe_.center_at(t);
    const double norm = std::abs(probe_.a) / std::sqrt(std::sqrt(pi) * probe_.l0);
    const cplx phase = std::exp(iu * (probe_.theta - pc.phase));
    const double rootN = std::sqrt(medium_.n_line);
    const cplx a_scale = pc.rabi * std::exp(iu * pc.phase) /
                         (rootN * pc.g);  // Psi -> A conversion (k0 phases at nodes)
    for (int j = 0; j < n_nodes_; ++j) {
      const double z = j * dz_;
      const cplx psi = norm * phase * std::exp(-0.5 * sq((z - center) / probe_.l0));
      const cplx dpsi = -((z - center) / sq(probe_.l0)) * psi;
      const cplx psi_corr = psi + pc.v * dpsi / coeffs.mu;  // adiabatic first order
      const cplx k0ph = std::exp(-iu * medium_.k0 * z);
      state_.A[static_cast<size_t>(probe_index_)][static_cast<size_t>(j)] =
          a_scale * k0ph * psi;
      state_.p12[static_cast<size_t>(j)] = -(pc.Gamma / coeffs.mu) * psi_corr / rootN;
      state_.sigma[static_cast<size_t>(probe_index_)][static_cast<size_t>(j)] =
          iu * (pc.g * state_.A[static_cast<size_t>(probe_index_)][static_cast<size_t>(j)] +
                pc.rabi * std::exp(iu * pc.phase) * k0ph *
                    state_.p12[static_cast<size_t>(j)]) /
          pc.gamma_tilde;
    }
  }

  cplx drive(double t) const {
    // Boundary value of the probe envelope entering at z = 0.
    const double arg = (probe_.z0 - probe_.v_l * t) / probe_.l0;
    return probe_.peak_amplitude() * std::exp(iu * probe_.theta) * std::exp(-0.5 * sq(arg));
  }

  void step(double t, bool with_drive) {
    const SegmentParams par = segment_params(medium_, channels_, schedule_, t);
    local_half(par, 0.5 * dt_);
    shift(t, with_drive);
    local_half(par, 0.5 * dt_);
  }

  MBState snapshot(double t) const {
    MBState s;
    s.t = t;
    for (size_t p = 0; p < channels_.size(); ++p) {
      MBChannelState cs;
      cs.label = channels_[p].label;
      cs.A = state_.A[p];
      cs.sigma = state_.sigma[p];
      s.channels.push_back(std::move(cs));
    }
    s.p12 = state_.p12;
    s.sigma2 = state_.sigma2;
    s.p22 = state_.p22;
    return s;
  }

  double exit_flux(size_t p) const {
    const bool fwd = channels_[p].direction == Direction::Forward;
    return std::norm(state_.A[p][static_cast<size_t>(fwd ? n_nodes_ - 1 : 0)]);
  }

  double track_p12() const {
    double m = 0.0;
    for (const auto& v : state_.p12) m = std::max(m, std::abs(v));
    return m;
  }

  double track_p22() const {
    double m = 0.0;
    for (double v : state_.p22) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  void rhs(const Fields& y, const SegmentParams& par, Fields& dy) const {
    const size_t nch = channels_.size();
    for (int j = 0; j < n_nodes_; ++j) {
      const size_t uj = static_cast<size_t>(j);
      const double z = j * dz_;
      cplx dp12 = -par.gamma12 * y.p12[uj];
      for (size_t p = 0; p < nch; ++p) {
        const cplx k0ph = par.forward[p] ? std::exp(-iu * medium_.k0 * z)
                                         : std::exp(iu * medium_.k0 * z);
        dy.sigma[p][uj] = -par.gamma_tilde[p] * y.sigma[p][uj] +
                          iu * par.g[p] * y.A[p][uj] +
                          iu * par.omega[p] * k0ph * y.p12[uj];
        dy.A[p][uj] = iu * par.Ng[p] * y.sigma[p][uj];
        dp12 += iu * std::conj(par.omega[p] * k0ph) * y.sigma[p][uj];
        if (options_.full_mode) {
          dp12 -= iu * par.g[p] * y.A[p][uj] * y.sigma2[p][uj];
          dy.sigma2[p][uj] = -std::conj(par.gamma_tilde[p]) * y.sigma2[p][uj] -
                             iu * par.g[p] * std::conj(y.A[p][uj]) * y.p12[uj] -
                             iu * std::conj(par.omega[p]) * y.p22[uj];
        }
      }
      dy.p12[uj] = dp12;
      if (options_.full_mode) {
        double dp22 = 0.0;
        for (size_t p = 0; p < nch; ++p)
          dp22 += 2.0 * std::imag(par.omega[p] * y.sigma2[p][uj]);
        dy.p22[uj] = dp22;
      }
    }
  }

  static void axpy(Fields& out, const Fields& y, const Fields& k, double h) {
    for (size_t p = 0; p < y.A.size(); ++p)
      for (size_t j = 0; j < y.p12.size(); ++j) {
        out.A[p][j] = y.A[p][j] + h * k.A[p][j];
        out.sigma[p][j] = y.sigma[p][j] + h * k.sigma[p][j];
      }
    for (size_t j = 0; j < y.p12.size(); ++j) out.p12[j] = y.p12[j] + h * k.p12[j];
    for (size_t p = 0; p < y.sigma2.size(); ++p)
      for (size_t j = 0; j < y.p12.size(); ++j)
        out.sigma2[p][j] = y.sigma2[p][j] + h * k.sigma2[p][j];
    for (size_t j = 0; j < y.p22.size(); ++j) out.p22[j] = y.p22[j] + h * k.p22[j];
  }

  void local_half(const SegmentParams& par, double h) {
    Fields& k1 = scratch_[0];
    Fields& k2 = scratch_[1];
    Fields& k3 = scratch_[2];
    Fields& k4 = scratch_[3];
    rhs(state_, par, k1);
    axpy(stage_, state_, k1, 0.5 * h);
    rhs(stage_, par, k2);
    axpy(stage_, state_, k2, 0.5 * h);
    rhs(stage_, par, k3);
    axpy(stage_, state_, k3, h);
    rhs(stage_, par, k4);
    for (size_t p = 0; p < state_.A.size(); ++p)
      for (size_t j = 0; j < state_.p12.size(); ++j) {
        state_.A[p][j] += h / 6.0 * (k1.A[p][j] + 2.0 * k2.A[p][j] +
                                     2.0 * k3.A[p][j] + k4.A[p][j]);
        state_.sigma[p][j] += h / 6.0 * (k1.sigma[p][j] + 2.0 * k2.sigma[p][j] +
                                         2.0 * k3.sigma[p][j] + k4.sigma[p][j]);
      }
    for (size_t j = 0; j < state_.p12.size(); ++j)
      state_.p12[j] += h / 6.0 * (k1.p12[j] + 2.0 * k2.p12[j] +
                                  2.0 * k3.p12[j] + k4.p12[j]);
    for (size_t p = 0; p < state_.sigma2.size(); ++p)
      for (size_t j = 0; j < state_.p12.size(); ++j)
        state_.sigma2[p][j] += h / 6.0 * (k1.sigma2[p][j] + 2.0 * k2.sigma2[p][j] +
                                          2.0 * k3.sigma2[p][j] + k4.sigma2[p][j]);
    for (size_t j = 0; j < state_.p22.size(); ++j)
      state_.p22[j] += h / 6.0 * (k1.p22[j] + 2.0 * k2.p22[j] +
                                  2.0 * k3.p22[j] + k4.p22[j]);
  }

  void shift(double t, bool with_drive) {
    for (size_t p = 0; p < channels_.size(); ++p) {
      auto& A = state_.A[p];
      if (channels_[p].direction == Direction::Forward) {
        for (int j = n_nodes_ - 1; j >= 1; --j)
          A[static_cast<size_t>(j)] = A[static_cast<size_t>(j - 1)];
        A[0] = (with_drive && static_cast<int>(p) == probe_index_) ? drive(t + dt_)
                                                                   : cplx(0.0);
      } else {
        for (int j = 0; j < n_nodes_ - 1; ++j)
          A[static_cast<size_t>(j)] = A[static_cast<size_t>(j + 1)];
        A[static_cast<size_t>(n_nodes_ - 1)] = cplx(0.0);
      }
    }
  }

  const MediumSpec& medium_;
  const std::vector<ChannelSpec>& channels_;
  const ControlSchedule& schedule_;
  const GaussianPulseSpec& probe_;
  MBOptions options_;
  int n_nodes_;
  double dz_, dt_;
  int probe_index_ = -1;
  Fields state_;
  Fields scratch_[4];
  Fields stage_;
};

}  // namespace

MBResult simulate_mb(const MediumSpec& medium, const std::vector<ChannelSpec>& channels,
                     const ControlSchedule& schedule, const GaussianPulseSpec& probe,
                     double t_start, double t_end, const MBGrid& grid,
                     const std::vector<double>& snapshot_times,
                     const MBOptions& options) {
  medium.validate();
  probe.validate();
  grid.validate(medium.length);
  if (t_end < t_start) throw std::invalid_argument("mb: t_end precedes t_start");

  MBSim sim(medium, channels, schedule, probe, grid, options);
  const double dt = sim.dt();
  const bool with_drive = options.init == MBInit::BoundaryDrive;
  if (!with_drive) sim.init_manifold(t_start);

  std::vector<double> wanted = snapshot_times;
  std::sort(wanted.begin(), wanted.end());

  MBResult res;
  res.dz = sim.dz();
  res.boundary.exit_flux.assign(channels.size(), {});

  const long n_steps = std::lround((t_end - t_start) / dt);
  size_t next_snap = 0;
  auto record = [&](double t) {
    res.boundary.t.push_back(t);
    for (size_t p = 0; p < channels.size(); ++p)
      res.boundary.exit_flux[p].push_back(sim.exit_flux(p));
    res.boundary.drive_flux.push_back(with_drive ? std::norm(sim.drive(t)) : 0.0);
    res.max_p12 = std::max(res.max_p12, sim.track_p12());
    if (options.full_mode) res.max_p22 = std::max(res.max_p22, sim.track_p22());
    while (next_snap < wanted.size() && t >= wanted[next_snap] - 0.5 * dt) {
      res.snapshots.push_back(sim.snapshot(t));
      ++next_snap;
    }
  };

  record(t_start);
  for (long s = 0; s < n_steps; ++s) {
    const double t = t_start + s * dt;
    sim.step(t, with_drive);
    const bool nan_guard = (s % 512) == 0 || s == n_steps - 1;
    if (nan_guard) {
      const double m = sim.track_p12();
      if (!std::isfinite(m))
        throw std::runtime_error("mb: non-finite state at t=" + std::to_string(t + dt));
    }
    record(t + dt);
  }
  return res;
}

ProfileSnapshot to_profile(const MBState& state, double dz) {
  ProfileSnapshot p;
  p.t = state.t;
  p.dz = dz;
  for (const auto& ch : state.channels) p.channels.push_back({ch.label, ch.A});
  return p;
}

namespace {

std::vector<cplx> resample(const std::vector<cplx>& f, double dz_from, int n_to,
                           double dz_to) {
  std::vector<cplx> out(static_cast<size_t>(n_to));
  const int n_from = static_cast<int>(f.size());
  for (int j = 0; j < n_to; ++j) {
    const double z = j * dz_to;
    const double x = z / dz_from;
    const int i0 = static_cast<int>(std::floor(x));
    if (i0 < 0 || i0 >= n_from - 1) {
      out[static_cast<size_t>(j)] =
          (i0 == n_from - 1) ? f[static_cast<size_t>(n_from - 1)] : cplx(0.0);
      continue;
    }
    const double w = x - i0;
    out[static_cast<size_t>(j)] =
        (1.0 - w) * f[static_cast<size_t>(i0)] + w * f[static_cast<size_t>(i0 + 1)];
  }
  return out;
}

}  // namespace

std::vector<MBCheckRow> compare_adiabatic(const std::vector<ProfileSnapshot>& mb,
                                          const std::vector<ProfileSnapshot>& adiabatic) {
  std::vector<MBCheckRow> rows;
  for (const auto& m : mb) {
    const ProfileSnapshot* ref = nullptr;
    for (const auto& a : adiabatic)
      if (std::abs(a.t - m.t) <= 1e-6 * std::max(1.0, std::abs(m.t))) ref = &a;
    if (!ref) throw std::invalid_argument("compare_adiabatic: no matching snapshot time");
    for (const auto& ch : m.channels) {
      const ChannelProfile* rch = nullptr;
      for (const auto& c : ref->channels)
        if (c.label == ch.label) rch = &c;
      if (!rch) throw std::invalid_argument("compare_adiabatic: mismatched channels");
      const int n = static_cast<int>(ch.A.size());
      const auto ref_A = resample(rch->A, ref->dz, n, m.dz);
      double diff = 0.0, norm = 0.0;
      for (int j = 0; j < n; ++j) {
        diff += sq(std::abs(ch.A[static_cast<size_t>(j)]) -
                   std::abs(ref_A[static_cast<size_t>(j)]));
        norm += sq(std::abs(ref_A[static_cast<size_t>(j)]));
      }
      MBCheckRow row;
      row.t = m.t;
      row.label = ch.label;
      row.l2 = norm > 0.0 ? std::sqrt(diff / norm) : 0.0;
      if (norm > 0.0) {
        const auto om = moments(ch.A, m.dz);
        const auto or_ = moments(ref_A, m.dz);
        row.centroid_err = om.centroid - or_.centroid;
        row.width_err = om.width - or_.width;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace mcsl
