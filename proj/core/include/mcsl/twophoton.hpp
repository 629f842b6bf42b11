#ifndef MCSL_TWOPHOTON_HPP
#define MCSL_TWOPHOTON_HPP

#include "mcsl/types.hpp"

namespace mcsl {

/// Correlation-length parameters of the spectrally anti-correlated
/// two-polariton probe state: a is the pair correlation length, b the
/// single-polariton length, with b << a in the regime of interest.
struct TwoPhotonSpec {
  double a = 0.0;
  double b = 0.0;
  double delta_l2 = 0.0;  // optional width-correction term, defaults to 0

  void validate() const;
};

/// Lengths of the two-polariton state after accumulating a spreading
/// integral s (length^2 units).
struct SpreadState {
  double s = 0.0;
  double b_tau_sq = 0.0;  // b^2 + s
  double b1_sq = 0.0;     // b_tau_sq + delta_l2
  double l_l2 = 0.0;      // two-polariton total extent at tau
  double l_coh2 = 0.0;    // two-polariton correlation length at tau
  double l_l1 = 0.0;      // first-order coherence extent at tau
  double l_coh1 = 0.0;    // first-order coherence length at tau
  double l_l2_0 = 0.0;    // total extent at tau = 0
  double l_l1_0 = 0.0;    // first-order extent at tau = 0

  static SpreadState make(const TwoPhotonSpec& spec, double s);
};

/// Symmetric two-polariton wavefunction at co-moving coordinates Z1, Z2.
cplx two_polariton_wavefunction(const TwoPhotonSpec& spec, double s, double Z1, double Z2);

struct Counts {
  double N2 = 0.0;        // two-polariton component weight
  double N = 0.0;         // mean polariton number
  double P_detect = 0.0;  // pair-detection probability, N2 / 2
};

Counts counts(const TwoPhotonSpec& spec, double s);

/// Second-order intensity correlator at (Z1, Z2); real non-negative.
double correlator_II(const TwoPhotonSpec& spec, double s, double Z1, double Z2);

/// Normalized second-order coherence of the two-polariton field.
double g2(const TwoPhotonSpec& spec, double s);

struct PreservationMargin {
  double margin = 0.0;  // b^2 - s
  bool preserved = false;
};

/// Correlation-preservation criterion: spreading up to b^2 keeps the
/// initial spatial quantum correlations intact.
PreservationMargin preservation_margin(const TwoPhotonSpec& spec, double s);

}  // namespace mcsl

#endif
