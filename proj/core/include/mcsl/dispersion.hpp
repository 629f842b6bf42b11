#ifndef MCSL_DISPERSION_HPP
#define MCSL_DISPERSION_HPP

#include <vector>

#include "mcsl/medium.hpp"

namespace mcsl {

/// Relative spectral response of channel p against the probe channel l.
/// Forward channels couple through k - k0, backward through k + k0.
cplx eta_forward(cplx xi_inv_p, cplx xi_inv_l, double k, double k0);
cplx eta_backward(cplx xi_inv_p, cplx xi_inv_l, double k, double k0);
cplx eta_channel(const ChannelCoeffs& ch, cplx xi_l, double k, double k0);

/// beta(t; k, k0): control-weighted sum of the channel responses.
cplx beta_sum(const DerivedCoeffs& coeffs, cplx xi_l, double k, double k0);

/// Complex frequency of the coupled multi-channel field at wavenumber k.
cplx dispersion_relation(const DerivedCoeffs& coeffs, cplx xi_l, double k, double k0);

/// United group velocity; forward channels add, backward subtract.
/// Shares one accumulation with stopping_residual so that residual == 0
/// implies exactly v == 0.
double group_velocity(const DerivedCoeffs& coeffs);

/// Sum over forward channels of Omega^2/g^2 minus the backward sum.
double stopping_residual(const DerivedCoeffs& coeffs);

enum class DispersionMode { General, TravelingOptimal, Stationary, StationaryOptimal };

/// Second-order dispersion coefficient (spatial spreading rate). General mode
/// is the full complex pair-sum form; the other modes are its reductions at
/// their validity conditions (forward-only optimum, stopping point, stopping
/// point at optimal detunings).
cplx second_order_dispersion(const DerivedCoeffs& coeffs, cplx xi_l, DispersionMode mode);

/// Detunings that remove the imaginary (chirp) part of the stationary
/// dispersion, referenced to the probe channel: forward channels get
/// +delta_l g^2/g_l^2, backward channels -delta_l g^2/g_l^2.
std::vector<double> optimal_detunings(const std::vector<ChannelSpec>& channels,
                                      const std::string& probe_label, double delta_l);

/// Time scale on which diffusion-like spreading destroys an envelope of
/// initial size l0; +infinity when every control is off.
double spreading_time(double l0, const DerivedCoeffs& coeffs);

struct DispersionReport {
  double v = 0.0;
  cplx d2;
  double stopping = 0.0;
  double spreading = 0.0;
  std::vector<double> k;
  std::vector<cplx> omega;
};

DispersionReport dispersion_report(const DerivedCoeffs& coeffs, cplx xi_l, double k0,
                                   double k_max, int n_samples, double l0);

}  // namespace mcsl

#endif
