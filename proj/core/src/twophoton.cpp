#include "mcsl/twophoton.hpp"

#include <cmath>
#include <stdexcept>

namespace mcsl {

void TwoPhotonSpec::validate() const {
  if (!(b > 0.0) || !(a > b))
    throw std::invalid_argument("two-photon spec requires a > b > 0");
  if (delta_l2 < 0.0)
    throw std::invalid_argument("two-photon spec requires delta_l2 >= 0");
}

SpreadState SpreadState::make(const TwoPhotonSpec& spec, double s) {
  spec.validate();
  if (s < 0.0) throw std::invalid_argument("spreading integral must be >= 0");
  SpreadState st;
  st.s = s;
  st.b_tau_sq = sq(spec.b) + s;
  st.b1_sq = st.b_tau_sq + spec.delta_l2;
  const double a2 = sq(spec.a);
  st.l_l2 = std::sqrt(2.0 * a2 + st.b1_sq);
  st.l_coh2 = std::sqrt(st.b1_sq * (2.0 + st.b1_sq / a2));
  st.l_l1 = std::sqrt(a2 + st.b1_sq);
  st.l_l2_0 = std::sqrt(2.0 * a2 + sq(spec.b));
  st.l_l1_0 = std::sqrt(a2 + sq(spec.b));
  st.l_coh1 = std::sqrt(2.0) * (st.l_l1 / a2) *
              std::sqrt(sq(st.l_l1) * sq(st.l_l1_0) - sq(a2));
  return st;
}

cplx two_polariton_wavefunction(const TwoPhotonSpec& spec, double s, double Z1, double Z2) {
  const SpreadState st = SpreadState::make(spec, s);
  const double n2 = counts(spec, s).N2;
  const double y = std::exp(-(sq(Z1) + sq(Z2)) / (2.0 * sq(st.l_l2))) *
                   std::exp(-sq(Z2 - Z1) / (2.0 * sq(st.l_coh2))) /
                   std::sqrt(pi * spec.a * st.l_coh2);
  return cplx(std::sqrt(n2) * y, 0.0);
}

Counts counts(const TwoPhotonSpec& spec, double s) {
  const SpreadState st = SpreadState::make(spec, s);
  Counts c;
  c.N2 = (spec.b / std::sqrt(st.b1_sq)) * (st.l_l2_0 / st.l_l2);
  c.N = 2.0 * std::sqrt(2.0) / std::sqrt(1.0 + st.b1_sq / sq(spec.b));
  c.P_detect = 0.5 * c.N2;
  return c;
}

double correlator_II(const TwoPhotonSpec& spec, double s, double Z1, double Z2) {
  const SpreadState st = SpreadState::make(spec, s);
  const double pref = (4.0 / std::sqrt(pi)) * st.l_l2_0 * spec.b /
                      (st.l_coh1 * sq(spec.a));
  return pref * std::exp(-(sq(Z1) + sq(Z2)) / (2.0 * sq(st.l_l1))) *
         std::exp(-sq(Z1 - Z2) / (2.0 * sq(st.l_coh1)));
}

double g2(const TwoPhotonSpec& spec, double s) {
  const SpreadState st = SpreadState::make(spec, s);
  const double b_tau = std::sqrt(st.b_tau_sq);
  return (spec.b / (2.0 * b_tau)) *
         (sq(spec.a) + sq(st.l_l1_0) * st.b1_sq / sq(spec.b)) /
         (st.l_l2_0 * st.l_l2);
}

PreservationMargin preservation_margin(const TwoPhotonSpec& spec, double s) {
  spec.validate();
  if (s < 0.0) throw std::invalid_argument("spreading integral must be >= 0");
  PreservationMargin m;
  m.margin = sq(spec.b) - s;
  m.preserved = m.margin >= 0.0;
  return m;
}

}  // namespace mcsl
