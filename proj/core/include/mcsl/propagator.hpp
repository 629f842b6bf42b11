#ifndef MCSL_PROPAGATOR_HPP
#define MCSL_PROPAGATOR_HPP

#include <string>
#include <vector>

#include "mcsl/medium.hpp"
#include "mcsl/pulse.hpp"
#include "mcsl/spectral_grid.hpp"

namespace mcsl {

/// Probe polariton state. The initial spectrum is kept frozen; evolution
/// accumulates the complex phase integral and the mode-projection factors,
/// so composing evolutions is exact and reversible bookkeeping.
struct MCState {
  double t0 = 0.0;
  double t = 0.0;
  double k0 = 0.0;
  std::string probe_label;
  double probe_phi = 0.0;  // control phase of the probe channel at init
  SpectralGrid grid;       // samples = psi_l(t0, k)
  std::vector<cplx> phase; // per-k accumulated integral of the mode frequency
  std::vector<cplx> I_t0;  // projection factor at t0
  std::vector<cplx> I_t;   // projection factor at the current segment
  bool boundary_warning = false;

  /// psi_l(t, k) = (I_t0 / I_t) exp(-i phase) psi_l(t0, k)
  std::vector<cplx> spectrum() const;
};

/// Complex frequency of the coupled k-mode including ground-coherence decay,
/// and the associated mode-projection factor.
cplx mode_frequency(const DerivedCoeffs& coeffs, cplx xi_l, double k, double k0);
cplx mode_projection(const DerivedCoeffs& coeffs, cplx xi_l, double k, double k0);

MCState init_probe(const GaussianPulseSpec& pulse, const MediumSpec& medium,
                   const std::vector<ChannelSpec>& channels,
                   const ControlSchedule& schedule, double t0, int n_k);

MCState evolve(MCState state, const MediumSpec& medium,
               const std::vector<ChannelSpec>& channels,
               const ControlSchedule& schedule, double t_target);

enum class SynthesisMethod { Spectral, Kernel };

/// Ratio-field envelopes of every channel on the z-grid, channel order
/// matching the channel list. The probe channel reproduces its own envelope.
std::vector<std::vector<cplx>> synthesize(const MCState& state, const MediumSpec& medium,
                                          const std::vector<ChannelSpec>& channels,
                                          SynthesisMethod method);

/// Electromagnetic envelopes A_p = Omega_p (N g_p^2)^{-1/2} Psi_p; channels
/// with Omega_p(t) = 0 return identically zero.
std::vector<std::vector<cplx>> to_amplitudes(const MCState& state, const MediumSpec& medium,
                                             const std::vector<ChannelSpec>& channels,
                                             const ControlSchedule& schedule, double t);

/// Distance of the synthesized state from the dark-state manifold: largest
/// relative L2 distance between dephased envelopes of active channel pairs.
double dark_residual(const MCState& state, const MediumSpec& medium,
                     const std::vector<ChannelSpec>& channels,
                     const ControlSchedule& schedule);

struct Observables {
  double centroid = 0.0;
  double width = 0.0;
  double polariton_number = 0.0;
};

Observables observables(const MCState& state);

/// First/second moments and norm of |envelope|^2 on a uniform grid.
Observables moments(const std::vector<cplx>& envelope, double dz, double z_first = 0.0);

}  // namespace mcsl

#endif
