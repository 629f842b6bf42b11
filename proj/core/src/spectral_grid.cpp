#include "mcsl/spectral_grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

namespace mcsl {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<cplx> run_fft(const std::vector<cplx>& in, int sign) {
  const int n = static_cast<int>(in.size());
  std::vector<cplx> out(in.size());
  // FFTW guarantees identical output for identical input within one build;
  // FFTW_ESTIMATE keeps planning deterministic as well.
  fftw_plan plan = fftw_plan_dft_1d(
      n,
      reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
      reinterpret_cast<fftw_complex*>(out.data()), sign,
      FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  if (!plan) throw std::runtime_error("fftw plan creation failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

}  // namespace

SpectralGrid::SpectralGrid(int n, double domain_length) : n_(n) {
  if (!power_of_two(n) || n < 64)
    throw std::invalid_argument("spectral grid size must be a power of two, >= 64");
  if (!(domain_length > 0.0))
    throw std::invalid_argument("spectral grid domain length must be > 0");
  dk_ = 2.0 * pi / domain_length;
  samples.assign(static_cast<size_t>(n), cplx(0.0));
}

std::vector<cplx> to_space(const SpectralGrid& grid, const std::vector<cplx>& spectrum) {
  if (static_cast<int>(spectrum.size()) != grid.n())
    throw std::invalid_argument("to_space: spectrum size does not match grid");
  auto out = run_fft(spectrum, FFTW_BACKWARD);
  const double scale = grid.dk() / std::sqrt(2.0 * pi);
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<cplx> to_spectrum(const SpectralGrid& grid, const std::vector<cplx>& field) {
  if (static_cast<int>(field.size()) != grid.n())
    throw std::invalid_argument("to_spectrum: field size does not match grid");
  auto out = run_fft(field, FFTW_FORWARD);
  const double scale = grid.dz() / std::sqrt(2.0 * pi);
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace mcsl
