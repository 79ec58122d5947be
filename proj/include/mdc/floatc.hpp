#pragma once

#include <cmath>
#include <complex>

namespace mdc {

using FloatC = std::complex<double>;

// Global comparison tolerance for the floating backend. Set once at startup
// (CLI flag or MDC_TOLERANCE); all values are immutable after that.
inline double& float_tolerance() {
  static double eps = 1e-9;
  return eps;
}

// epsilon-relative for magnitudes > 1, epsilon-absolute otherwise
inline bool approx_eq(double a, double b, double eps) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= eps * scale;
}
inline bool approx_eq(double a, double b) { return approx_eq(a, b, float_tolerance()); }

inline bool approx_eq(const FloatC& a, const FloatC& b, double eps) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= eps * scale;
}
inline bool approx_eq(const FloatC& a, const FloatC& b) {
  return approx_eq(a, b, float_tolerance());
}

inline bool approx_zero(const FloatC& a, double eps) { return std::abs(a) <= eps; }
inline bool approx_zero(const FloatC& a) { return approx_zero(a, float_tolerance()); }

}  // namespace mdc
