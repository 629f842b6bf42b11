#ifndef MCSL_GAUSSIAN_HPP
#define MCSL_GAUSSIAN_HPP

#include <string>
#include <vector>

#include "mcsl/medium.hpp"
#include "mcsl/pulse.hpp"

namespace mcsl {

/// Closed-form description of one channel's evolved Gaussian envelope.
struct GaussianChannelReport {
  std::string label;
  bool active = false;
  double center = 0.0;   // envelope center
  double width = 0.0;    // evolved spatial size
  cplx shift;            // kinematic center shift
  cplx dl2;              // width correction (length^2)
  double peak_psi = 0.0; // ratio-field peak magnitude
  double peak_amp = 0.0; // electromagnetic peak magnitude
  double phase = 0.0;    // theta + phi_p - phi_l
};

struct GaussianReport {
  double t0 = 0.0;
  double t = 0.0;
  double drift = 0.0;           // accumulated group-velocity displacement
  cplx spread;                  // accumulated second-order dispersion integral
  cplx B;                       // curvature bookkeeping term at t
  double polariton_number = 0.0;
  std::vector<GaussianChannelReport> channels;

  const GaussianChannelReport& at(const std::string& label) const;
};

/// Evolve a Gaussian probe analytically from t0 to t. Requires near-real
/// widths (resonance or detunings satisfying the stationary optimum);
/// otherwise reports an error directing to the spectral propagator.
GaussianReport evolve_gaussian(const GaussianPulseSpec& pulse, const MediumSpec& medium,
                               const std::vector<ChannelSpec>& channels,
                               const ControlSchedule& schedule, double t0, double t);

struct PeakAmplitude {
  std::string label;
  double amplitude = 0.0;
  double phase = 0.0;
};

/// Stationary-light peak amplitudes; requires the stopping condition at t.
std::vector<PeakAmplitude> stationary_amplitudes(const GaussianPulseSpec& pulse,
                                                 const MediumSpec& medium,
                                                 const std::vector<ChannelSpec>& channels,
                                                 const ControlSchedule& schedule,
                                                 double t0, double t);

struct EmittedChannel {
  std::string label;
  double duration = 0.0;  // temporal width of the released component
  double energy = 0.0;    // W_p
  double peak_out = 0.0;  // released peak amplitude
};

struct EmittedReport {
  double t_out = 0.0;
  double input_energy = 0.0;   // W_l,o (units with hbar = 1)
  double total_energy = 0.0;   // W_out
  double mean_frequency = 0.0; // energy-weighted carrier frequency
  double width_out = 0.0;      // common released spatial size l(t_out)
  double v_travel = 0.0;
  std::vector<EmittedChannel> channels;
};

/// Released-pulse durations and energy bookkeeping at a traveling release
/// time t_out (only forward channels may be active).
EmittedReport emitted_pulse_and_energies(const GaussianPulseSpec& pulse,
                                         const MediumSpec& medium,
                                         const std::vector<ChannelSpec>& channels,
                                         const ControlSchedule& schedule,
                                         double t0, double t_out);

/// Closed-form polariton number of the evolved probe envelope.
double polariton_number(const GaussianPulseSpec& pulse, const MediumSpec& medium,
                        const std::vector<ChannelSpec>& channels,
                        const ControlSchedule& schedule, double t0, double t);

}  // namespace mcsl

#endif
