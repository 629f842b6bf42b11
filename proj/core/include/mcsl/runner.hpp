#ifndef MCSL_RUNNER_HPP
#define MCSL_RUNNER_HPP

#include <string>
#include <utility>
#include <vector>

#include "mcsl/mboracle.hpp"
#include "mcsl/scenario.hpp"
#include "mcsl/twophoton.hpp"

namespace mcsl {

/// One emitted output file: name and full contents.
using NamedCsv = std::pair<std::string, std::string>;

/// Dispersion table at time t: k sweep plus a header block with the
/// design quantities.
std::string dispersion_csv(const Scenario& sc, double t);

/// Spectral propagation: one file per snapshot (z, per-channel envelopes)
/// plus a summary file (t, centroid, width, polariton number, dark residual).
std::vector<NamedCsv> propagate_csvs(const Scenario& sc);

/// Closed-form Gaussian engine sampled at the run snapshots.
std::string gaussian_csv(const Scenario& sc);

/// MB / adiabatic cross-check rows (t, channel, l2, centroid, width errors).
std::string mb_check_csv(const Scenario& sc);
std::vector<MBCheckRow> run_mb_check(const Scenario& sc);

/// Two-photon figure tables; s_ratios are sqrt(s)/b values for the
/// wavefunction grids.
std::vector<NamedCsv> fig2_csvs(const TwoPhotonSpec& spec,
                                const std::vector<double>& s_ratios, int n_grid);
std::string fig3_csv(const TwoPhotonSpec& spec, double s_max, int n);
std::string fig4_csv(const TwoPhotonSpec& spec, double s_max, int n);

/// Adiabatic-side per-channel amplitude snapshots for a scenario; shared by
/// the MB cross-check and the propagate emission.
std::vector<ProfileSnapshot> adiabatic_profiles(const Scenario& sc,
                                                const std::vector<double>& times);

}  // namespace mcsl

#endif
