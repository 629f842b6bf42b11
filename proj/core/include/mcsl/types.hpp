#ifndef MCSL_TYPES_HPP
#define MCSL_TYPES_HPP

#include <complex>

namespace mcsl {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx iu{0.0, 1.0};

// Natural simulation units: lengths and inverse rates share one scale.
inline constexpr double c_light = 1.0;

inline double sq(double x) { return x * x; }
inline cplx sq(cplx x) { return x * x; }

}  // namespace mcsl

#endif
