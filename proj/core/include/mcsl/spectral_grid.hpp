#ifndef MCSL_SPECTRAL_GRID_HPP
#define MCSL_SPECTRAL_GRID_HPP

#include <vector>

#include "mcsl/types.hpp"

namespace mcsl {

/// Uniform wavenumber grid dual to a z-grid covering [0, L): dk = 2*pi/L.
/// Samples are stored in FFT slot order (0, dk, ..., k_max, -k_max, ..., -dk).
/// n must be a power of two and at least 64.
class SpectralGrid {
 public:
  SpectralGrid() = default;
  SpectralGrid(int n, double domain_length);

  int n() const { return n_; }
  double dk() const { return dk_; }
  double domain() const { return n_ ? 2.0 * pi / dk_ : 0.0; }
  double dz() const { return domain() / n_; }
  double k(int slot) const { return dk_ * (slot <= n_ / 2 - 1 ? slot : slot - n_); }
  double k_max() const { return dk_ * (n_ / 2); }

  std::vector<cplx> samples;

 private:
  int n_ = 0;
  double dk_ = 0.0;
};

/// Unitary-convention transforms:
///   Psi(z_j) = (2 pi)^{-1/2} sum_k e^{+ikz} psi(k) dk
///   psi(k)   = (2 pi)^{-1/2} sum_j e^{-ikz} Psi(z) dz
std::vector<cplx> to_space(const SpectralGrid& grid, const std::vector<cplx>& spectrum);
std::vector<cplx> to_spectrum(const SpectralGrid& grid, const std::vector<cplx>& field);

}  // namespace mcsl

#endif
