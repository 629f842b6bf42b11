#ifndef MCSL_MBORACLE_HPP
#define MCSL_MBORACLE_HPP

#include <string>
#include <vector>

#include "mcsl/medium.hpp"
#include "mcsl/pulse.hpp"

namespace mcsl {

/// Space-time grid of the direct semiclassical integration. The transport
/// scheme advances fields exactly one cell per step, so c*dt must equal dz.
struct MBGrid {
  int n_z = 512;                    // cells over [0, L]; n_z + 1 nodes
  double dt = 0.0;                  // 0 selects dz / c
  std::string scheme = "shift-rk4"; // transport discretization identifier

  double dz(double length) const { return length / n_z; }
  void validate(double length) const;
};

struct MBChannelState {
  std::string label;
  std::vector<cplx> A;      // electromagnetic envelope per node
  std::vector<cplx> sigma;  // per-atom optical coherence per node
};

struct MBState {
  double t = 0.0;
  std::vector<MBChannelState> channels;
  std::vector<cplx> p12;  // per-atom ground coherence
  // Diagnostic (full) mode extras; empty in the standard weak-field closure.
  std::vector<std::vector<cplx>> sigma2;
  std::vector<double> p22;
};

struct MBBoundarySeries {
  std::vector<double> t;
  // Per channel, |A|^2 at the exit face (z=L forward, z=0 backward).
  std::vector<std::vector<double>> exit_flux;
  std::vector<double> drive_flux;  // |A|^2 of the probe drive at z=0
};

enum class MBInit {
  BoundaryDrive,  // zero state; probe injected through z=0
  Manifold,       // state prepared on the adiabatic manifold at t_start
};

struct MBOptions {
  MBInit init = MBInit::Manifold;
  bool full_mode = false;  // integrate excited-state populations as well
};

struct MBResult {
  std::vector<MBState> snapshots;
  MBBoundarySeries boundary;
  double dz = 0.0;
  double max_p12 = 0.0;
  double max_p22 = 0.0;  // full mode only
};

MBResult simulate_mb(const MediumSpec& medium, const std::vector<ChannelSpec>& channels,
                     const ControlSchedule& schedule, const GaussianPulseSpec& probe,
                     double t_start, double t_end, const MBGrid& grid,
                     const std::vector<double>& snapshot_times,
                     const MBOptions& options = {});

/// Generic per-channel envelope snapshot used on both sides of the
/// MB / adiabatic comparison.
struct ChannelProfile {
  std::string label;
  std::vector<cplx> A;
};

struct ProfileSnapshot {
  double t = 0.0;
  double dz = 0.0;
  std::vector<ChannelProfile> channels;
};

ProfileSnapshot to_profile(const MBState& state, double dz);

struct MBCheckRow {
  double t = 0.0;
  std::string label;
  double l2 = 0.0;            // relative L2 error of |A|
  double centroid_err = 0.0;  // centroid difference
  double width_err = 0.0;     // rms width difference
};

/// Per snapshot and channel, compares |A| profiles (reference = second
/// argument, resampled onto the first argument's grid).
std::vector<MBCheckRow> compare_adiabatic(const std::vector<ProfileSnapshot>& mb,
                                          const std::vector<ProfileSnapshot>& adiabatic);

}  // namespace mcsl

#endif
