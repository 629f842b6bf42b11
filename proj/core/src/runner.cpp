#include "mcsl/runner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mcsl/csv.hpp"
#include "mcsl/dispersion.hpp"
#include "mcsl/gaussian.hpp"
#include "mcsl/propagator.hpp"

namespace mcsl {

namespace {

std::string snapshot_name(size_t index) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "snapshot_%02zu.csv", index);
  return buf;
}

}  // namespace

std::string dispersion_csv(const Scenario& sc, double t) {
  const DerivedCoeffs coeffs = derive_coefficients(sc.medium, sc.channels, sc.schedule, t);
  const cplx xi_l = coeffs.at(sc.probe.label).xi;
  const double k_span = 8.0 / sc.probe.l0;
  const auto rep = dispersion_report(coeffs, xi_l, sc.medium.k0, k_span, 257, sc.probe.l0);

  CsvBuilder csv;
  csv.raw(echo_parameters(sc));
  csv.comment("t = " + csv_num(t));
  csv.comment("v = " + csv_num(rep.v));
  csv.comment("re_d2 = " + csv_num(rep.d2.real()));
  csv.comment("im_d2 = " + csv_num(rep.d2.imag()));
  csv.comment("stopping_residual = " + csv_num(rep.stopping));
  csv.comment("spreading_time = " + csv_num(rep.spreading));
  csv.header({"k", "re_omega", "im_omega"});
  for (size_t i = 0; i < rep.k.size(); ++i)
    csv.row({rep.k[i], rep.omega[i].real(), rep.omega[i].imag()});
  return csv.str();
}

std::vector<ProfileSnapshot> adiabatic_profiles(const Scenario& sc,
                                                const std::vector<double>& times) {
  MCState state = init_probe(sc.pulse(), sc.medium, sc.channels, sc.schedule,
                             sc.run.t0, sc.run.n_k);
  std::vector<double> sorted = times;
  std::sort(sorted.begin(), sorted.end());
  std::vector<ProfileSnapshot> out;
  for (double t : sorted) {
    state = evolve(std::move(state), sc.medium, sc.channels, sc.schedule, t);
    const auto amps = to_amplitudes(state, sc.medium, sc.channels, sc.schedule, t);
    ProfileSnapshot snap;
    snap.t = t;
    snap.dz = state.grid.dz();
    for (size_t p = 0; p < sc.channels.size(); ++p)
      snap.channels.push_back({sc.channels[p].label, amps[p]});
    out.push_back(std::move(snap));
  }
  return out;
}

std::vector<NamedCsv> propagate_csvs(const Scenario& sc) {
  MCState state = init_probe(sc.pulse(), sc.medium, sc.channels, sc.schedule,
                             sc.run.t0, sc.run.n_k);
  std::vector<double> times = sc.run.snapshots;
  std::sort(times.begin(), times.end());

  std::vector<NamedCsv> files;
  CsvBuilder summary;
  summary.raw(echo_parameters(sc));
  summary.header({"t", "centroid", "width", "polariton_number", "dark_residual"});

  for (size_t i = 0; i < times.size(); ++i) {
    state = evolve(std::move(state), sc.medium, sc.channels, sc.schedule, times[i]);
    const auto psi = synthesize(state, sc.medium, sc.channels, SynthesisMethod::Spectral);
    const auto amp = to_amplitudes(state, sc.medium, sc.channels, sc.schedule, times[i]);

    CsvBuilder snap;
    snap.raw(echo_parameters(sc));
    snap.comment("t = " + csv_num(times[i]));
    std::vector<std::string> cols{"z"};
    for (const auto& ch : sc.channels) {
      cols.push_back("re_psi_" + ch.label);
      cols.push_back("im_psi_" + ch.label);
      cols.push_back("re_a_" + ch.label);
      cols.push_back("im_a_" + ch.label);
    }
    snap.header(cols);
    const int n = state.grid.n();
    for (int j = 0; j < n; ++j) {
      std::vector<double> row{j * state.grid.dz()};
      for (size_t p = 0; p < sc.channels.size(); ++p) {
        row.push_back(psi[p][static_cast<size_t>(j)].real());
        row.push_back(psi[p][static_cast<size_t>(j)].imag());
        row.push_back(amp[p][static_cast<size_t>(j)].real());
        row.push_back(amp[p][static_cast<size_t>(j)].imag());
      }
      snap.row(row);
    }
    files.emplace_back(snapshot_name(i), snap.str());

    const Observables obs = observables(state);
    int active = 0;
    for (const auto& ch : sc.channels)
      active += sc.schedule.rabi(ch.label, times[i]) > 0.0 ? 1 : 0;
    const double dark =
        active >= 2 ? dark_residual(state, sc.medium, sc.channels, sc.schedule)
                    : std::numeric_limits<double>::quiet_NaN();
    summary.row({times[i], obs.centroid, obs.width, obs.polariton_number, dark});
  }
  files.emplace_back("summary.csv", summary.str());
  return files;
}

std::string gaussian_csv(const Scenario& sc) {
  std::vector<double> times = sc.run.snapshots;
  std::sort(times.begin(), times.end());
  const GaussianPulseSpec pulse = sc.pulse();

  CsvBuilder csv;
  csv.raw(echo_parameters(sc));
  std::vector<std::string> cols{"t", "center", "width", "polariton_number"};
  for (const auto& ch : sc.channels) cols.push_back("peak_amp_" + ch.label);
  for (const auto& ch : sc.channels) cols.push_back("energy_" + ch.label);
  cols.push_back("energy_out");
  csv.header(cols);

  for (double t : times) {
    const GaussianReport rep =
        evolve_gaussian(pulse, sc.medium, sc.channels, sc.schedule, sc.run.t0, t);
    const auto& probe_rep = rep.at(sc.probe.label);
    std::vector<double> row{t, probe_rep.center, probe_rep.width, rep.polariton_number};
    for (const auto& ch : rep.channels) row.push_back(ch.peak_amp);
    bool traveling = true;
    for (const auto& ch : sc.channels)
      if (ch.direction == Direction::Backward && sc.schedule.rabi(ch.label, t) > 0.0)
        traveling = false;
    if (traveling) {
      const EmittedReport em =
          emitted_pulse_and_energies(pulse, sc.medium, sc.channels, sc.schedule, sc.run.t0, t);
      for (const auto& ch : sc.channels) {
        double w = 0.0;
        for (const auto& e : em.channels)
          if (e.label == ch.label) w = e.energy;
        row.push_back(w);
      }
      row.push_back(em.total_energy);
    } else {
      for (size_t p = 0; p < sc.channels.size() + 1; ++p)
        row.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    csv.row(row);
  }
  return csv.str();
}

std::vector<MBCheckRow> run_mb_check(const Scenario& sc) {
  if (sc.run.snapshots.empty())
    throw ScenarioError("mb-check needs run.snapshots");
  std::vector<double> times = sc.run.snapshots;
  std::sort(times.begin(), times.end());
  for (double t : times)
    if (t < sc.run.t0) throw ScenarioError("mb-check snapshots must not precede run.t0");

  MBOptions opt;
  opt.init = sc.run.mb_init == "drive" ? MBInit::BoundaryDrive : MBInit::Manifold;
  MBGrid grid;
  grid.n_z = sc.run.n_z;
  grid.dt = sc.run.dt;
  const double t_start = opt.init == MBInit::BoundaryDrive ? sc.run.t_start : sc.run.t0;
  const MBResult mb = simulate_mb(sc.medium, sc.channels, sc.schedule, sc.pulse(),
                                  t_start, times.back(), grid, times, opt);

  std::vector<ProfileSnapshot> mb_profiles;
  std::vector<double> matched;
  for (const auto& s : mb.snapshots) {
    mb_profiles.push_back(to_profile(s, mb.dz));
    matched.push_back(s.t);
  }
  const auto ad_profiles = adiabatic_profiles(sc, matched);
  return compare_adiabatic(mb_profiles, ad_profiles);
}

std::string mb_check_csv(const Scenario& sc) {
  const auto rows = run_mb_check(sc);
  CsvBuilder csv;
  csv.raw(echo_parameters(sc));
  csv.header({"t", "channel", "l2_err", "centroid_err", "width_err"});
  for (const auto& r : rows)
    csv.line({csv_num(r.t), r.label, csv_num(r.l2), csv_num(r.centroid_err),
              csv_num(r.width_err)});
  return csv.str();
}

std::vector<NamedCsv> fig2_csvs(const TwoPhotonSpec& spec,
                                const std::vector<double>& s_ratios, int n_grid) {
  std::vector<NamedCsv> out;
  for (size_t idx = 0; idx < s_ratios.size(); ++idx) {
    const double s = sq(s_ratios[idx] * spec.b);
    const SpreadState st = SpreadState::make(spec, s);
    const double span = 3.0 * st.l_l2 / std::sqrt(2.0);
    CsvBuilder csv;
    csv.comment("a = " + csv_num(spec.a) + ", b = " + csv_num(spec.b));
    csv.comment("sqrt_s_over_b = " + csv_num(s_ratios[idx]) + ", s = " + csv_num(s));
    csv.header({"Z1", "Z2", "abs_psi"});
    for (int i = 0; i < n_grid; ++i)
      for (int j = 0; j < n_grid; ++j) {
        const double Z1 = -span + 2.0 * span * i / (n_grid - 1);
        const double Z2 = -span + 2.0 * span * j / (n_grid - 1);
        csv.row({Z1, Z2, std::abs(two_polariton_wavefunction(spec, s, Z1, Z2))});
      }
    char name[48];
    std::snprintf(name, sizeof name, "fig2_%02zu.csv", idx);
    out.emplace_back(name, csv.str());
  }
  return out;
}

std::string fig3_csv(const TwoPhotonSpec& spec, double s_max, int n) {
  CsvBuilder csv;
  csv.comment("a = " + csv_num(spec.a) + ", b = " + csv_num(spec.b));
  csv.header({"s", "sqrt_s_over_b", "N2", "N"});
  for (int i = 0; i < n; ++i) {
    const double s = s_max * i / (n - 1);
    const Counts c = counts(spec, s);
    csv.row({s, std::sqrt(s) / spec.b, c.N2, c.N});
  }
  return csv.str();
}

std::string fig4_csv(const TwoPhotonSpec& spec, double s_max, int n) {
  CsvBuilder csv;
  csv.comment("a = " + csv_num(spec.a) + ", b = " + csv_num(spec.b));
  csv.comment("g2_at_zero = " + csv_num(g2(spec, 0.0)));
  // Bisection for the classical crossing g2 = 1.
  double lo = 0.0, hi = s_max;
  if (g2(spec, hi) > 1.0) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g2(spec, mid) < 1.0 ? lo : hi) = mid;
    }
    csv.comment("g2_unity_s = " + csv_num(0.5 * (lo + hi)));
  }
  const double limit = (sq(spec.a) + sq(spec.b)) /
                       (2.0 * spec.b * std::sqrt(2.0 * sq(spec.a) + sq(spec.b)));
  csv.comment("g2_limit = " + csv_num(limit));
  csv.header({"s", "sqrt_s_over_b", "g2"});
  for (int i = 0; i < n; ++i) {
    const double s = s_max * i / (n - 1);
    csv.row({s, std::sqrt(s) / spec.b, g2(spec, s)});
  }
  return csv.str();
}

}  // namespace mcsl
