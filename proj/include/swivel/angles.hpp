#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace swivel {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle to [0, 2*pi).
inline double wrap_two_pi(double a) {
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;  // fmod rounding can land exactly on 2*pi
  return r;
}

/// Reduce an angle to [-pi, pi].
inline double wrap_pi(double a) { return std::remainder(a, two_pi); }

/// Signed angular difference b - a, reduced to [-pi, pi].
inline double angle_delta(double a, double b) { return std::remainder(b - a, two_pi); }

/// Principal value of arg(b) - arg(a), computed without taking either
/// argument separately (robust when both wind around the branch cut).
inline double arg_delta(std::complex<double> a, std::complex<double> b) {
  const std::complex<double> q = std::conj(a) * b;
  return std::atan2(q.imag(), q.real());
}

/// Clamp to [-1, 1] for acos/asin inputs; |excess| beyond the interval is
/// reported through *overshoot when non-null.
inline double clamp_unit(double x, double* overshoot = nullptr) {
  double over = 0.0;
  if (x > 1.0) {
    over = x - 1.0;
    x = 1.0;
  } else if (x < -1.0) {
    over = -1.0 - x;
    x = -1.0;
  }
  if (overshoot) *overshoot = over;
  return x;
}

}  // namespace swivel
