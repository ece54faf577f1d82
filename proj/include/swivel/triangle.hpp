#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "swivel/angles.hpp"
#include "swivel/errors.hpp"

namespace swivel {

enum class CurvatureSign { Spherical, Euclidean, Hyperbolic };

inline const char* to_string(CurvatureSign c) {
  switch (c) {
    case CurvatureSign::Spherical: return "spherical";
    case CurvatureSign::Euclidean: return "euclidean";
    case CurvatureSign::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

/// Solved triangle on the unit-curvature model surface (or the plane),
/// optionally with the asymptotic-velocity prediction attached.
struct TrianglePrediction {
  CurvatureSign curvature_sign = CurvatureSign::Euclidean;
  std::array<double, 3> lengths{};
  std::array<double, 3> angles{};  // angle j opposite side j
  double area = 0.0;
  double predicted_omega = 0.0;
};

namespace detail {

// acos with inputs clamped to [-1,1]. Clamping hides roundoff only; an
// overshoot beyond 1e-9 means the triangle data was inadmissible.
inline double checked_acos(double x, const char* who) {
  double over = 0.0;
  x = clamp_unit(x, &over);
  if (over > 1e-9)
    throw std::domain_error(std::string(who) + ": cosine overshoot " + std::to_string(over) +
                            " exceeds roundoff; inadmissible input");
  return std::acos(x);
}

inline void require_triangle(const std::array<double, 3>& l) {
  for (double s : l)
    if (!(s > 0.0)) throw std::domain_error("triangle: side lengths must be positive");
  if (!(l[0] < l[1] + l[2]))
    throw std::domain_error("triangle: inequality l1 < l2 + l3 fails");
  if (!(l[1] < l[2] + l[0]))
    throw std::domain_error("triangle: inequality l2 < l3 + l1 fails");
  if (!(l[2] < l[0] + l[1]))
    throw std::domain_error("triangle: inequality l3 < l1 + l2 fails");
}

}  // namespace detail

/// Angles of the triangle with sides `lengths` on the plane, unit sphere
/// or unit-curvature hyperbolic plane, by the matching law of cosines.
/// angles[j] is opposite lengths[j]. Spherical triangles additionally
/// require l1 + l2 + l3 < pi.
inline std::array<double, 3> triangle_angles(CurvatureSign sign,
                                             const std::array<double, 3>& lengths) {
  detail::require_triangle(lengths);
  if (sign == CurvatureSign::Spherical) {
    const double total = lengths[0] + lengths[1] + lengths[2];
    if (!(total < pi))
      throw std::domain_error("triangle: spherical solver needs l1 + l2 + l3 < pi, got " +
                              std::to_string(total));
  }

  std::array<double, 3> alpha{};
  for (int j = 0; j < 3; ++j) {
    const double a = lengths[j];             // side opposite the angle
    const double b = lengths[(j + 1) % 3];   // adjacent sides
    const double c = lengths[(j + 2) % 3];
    double cosv = 0.0;
    switch (sign) {
      case CurvatureSign::Euclidean:
        cosv = (b * b + c * c - a * a) / (2.0 * b * c);
        break;
      case CurvatureSign::Spherical:
        cosv = (std::cos(a) - std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c));
        break;
      case CurvatureSign::Hyperbolic:
        cosv = (std::cosh(b) * std::cosh(c) - std::cosh(a)) / (std::sinh(b) * std::sinh(c));
        break;
    }
    alpha[j] = detail::checked_acos(cosv, "triangle_angles");
  }
  return alpha;
}

/// Triangle area. Flat triangles use Heron's formula on the sides; the
/// curved models use the angle excess / defect.
inline double triangle_area(CurvatureSign sign, const std::array<double, 3>& angles,
                            const std::array<double, 3>& lengths) {
  switch (sign) {
    case CurvatureSign::Euclidean: {
      const double s = 0.5 * (lengths[0] + lengths[1] + lengths[2]);
      return std::sqrt(std::max(0.0, s * (s - lengths[0]) * (s - lengths[1]) * (s - lengths[2])));
    }
    case CurvatureSign::Spherical:
      return angles[0] + angles[1] + angles[2] - pi;
    case CurvatureSign::Hyperbolic:
      return pi - (angles[0] + angles[1] + angles[2]);
  }
  return 0.0;
}

/// Area from the side lengths alone (l'Huilier's theorem and its
/// hyperbolic analogue). Independent of the angle solver, so it serves
/// as the Gauss-Bonnet cross-check.
inline double triangle_area_from_sides(CurvatureSign sign, const std::array<double, 3>& l) {
  const double s = 0.5 * (l[0] + l[1] + l[2]);
  switch (sign) {
    case CurvatureSign::Euclidean:
      return std::sqrt(std::max(0.0, s * (s - l[0]) * (s - l[1]) * (s - l[2])));
    case CurvatureSign::Spherical: {
      const double t = std::tan(0.5 * s) * std::tan(0.5 * (s - l[0])) *
                       std::tan(0.5 * (s - l[1])) * std::tan(0.5 * (s - l[2]));
      return 4.0 * std::atan(std::sqrt(std::max(0.0, t)));
    }
    case CurvatureSign::Hyperbolic: {
      const double t = std::tanh(0.5 * s) * std::tanh(0.5 * (s - l[0])) *
                       std::tanh(0.5 * (s - l[1])) * std::tanh(0.5 * (s - l[2]));
      return 4.0 * std::atan(std::sqrt(std::max(0.0, t)));
    }
  }
  return 0.0;
}

/// Constant-curvature asymptotic velocity for a three-joint arm whose
/// angular velocities are given in the relative (joint-to-joint) angle
/// convention:
///
///   omega = w1 + ((pi - a1)/pi) w2 + (a3/pi) w3.
///
/// The equivalent area form (pi - a1 = a2 + a3 + A hyperbolic,
/// a2 + a3 - A spherical, a2 + a3 flat) is evaluated as well and the two
/// must agree to 1e-12 -- they are the same number by Gauss-Bonnet.
inline TrianglePrediction predicted_omega_constant(CurvatureSign sign,
                                                   const std::array<double, 3>& lengths,
                                                   const std::array<double, 3>& omegas) {
  TrianglePrediction p;
  p.curvature_sign = sign;
  p.lengths = lengths;
  p.angles = triangle_angles(sign, lengths);
  p.area = triangle_area(sign, p.angles, lengths);

  const double w1 = omegas[0], w2 = omegas[1], w3 = omegas[2];
  const double direct = w1 + (pi - p.angles[0]) / pi * w2 + p.angles[2] / pi * w3;

  double coeff2 = p.angles[1] + p.angles[2];
  if (sign == CurvatureSign::Hyperbolic) coeff2 += p.area;
  if (sign == CurvatureSign::Spherical) coeff2 -= p.area;
  const double via_area = w1 + coeff2 / pi * w2 + p.angles[2] / pi * w3;

  if (std::abs(direct - via_area) > 1e-12)
    throw numerical_error("predicted_omega_constant: angle and area forms disagree by " +
                          std::to_string(std::abs(direct - via_area)));
  p.predicted_omega = direct;
  return p;
}

/// General constant curvature kappa != 0 reduces to the unit models by
/// scaling lengths with sqrt(|kappa|); predictions are scale-free in the
/// angles, so only the solved triangle changes.
inline std::array<double, 3> triangle_angles_kappa(double kappa,
                                                   const std::array<double, 3>& lengths) {
  if (kappa == 0.0) return triangle_angles(CurvatureSign::Euclidean, lengths);
  const double s = std::sqrt(std::abs(kappa));
  std::array<double, 3> scaled{lengths[0] * s, lengths[1] * s, lengths[2] * s};
  return triangle_angles(kappa > 0 ? CurvatureSign::Spherical : CurvatureSign::Hyperbolic, scaled);
}

/// Max deviation of the curved-model angles at shrunken sides s*lengths
/// from the flat angles at the original lengths. Second order in s.
inline double flat_limit_check(CurvatureSign sign, const std::array<double, 3>& lengths,
                               double s) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("flat_limit_check: s in (0, 1]");
  const auto flat = triangle_angles(CurvatureSign::Euclidean, lengths);
  std::array<double, 3> scaled{lengths[0] * s, lengths[1] * s, lengths[2] * s};
  const auto curved = triangle_angles(sign, scaled);
  double dev = 0.0;
  for (int j = 0; j < 3; ++j) dev = std::max(dev, std::abs(curved[j] - flat[j]));
  return dev;
}

}  // namespace swivel
