#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "swivel/angles.hpp"
#include "swivel/errors.hpp"
#include "swivel/torus_flow.hpp"
#include "swivel/triangle.hpp"

namespace swivel {

/// How the joint angles are measured. `horizontal`: against a fixed
/// direction of the plane. `relative`: against the continued direction of
/// the previous joint (the only convention that survives on curved
/// surfaces; the first joint uses a fixed reference direction either way).
enum class AngleConvention { horizontal, relative };

/// Convert a torus point between the two angle conventions. The relative
/// angles are the consecutive differences of the horizontal ones,
///   rel_1 = h_1,  rel_j = h_j - h_{j-1}  (mod 2*pi),
/// and the inverse is the cumulative sum.
inline TorusState convert_angles(const TorusState& theta, AngleConvention from,
                                 AngleConvention to) {
  if (from == to) return theta;
  const std::size_t n = theta.size();
  std::vector<double> out(n);
  if (from == AngleConvention::horizontal) {
    out[0] = theta[0];
    for (std::size_t j = 1; j < n; ++j) out[j] = theta[j] - theta[j - 1];
  } else {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += theta[j];
      out[j] = acc;
    }
  }
  return TorusState(std::move(out));
}

/// A swiveling arm: joint lengths, joint angular velocities, initial
/// phases, and the convention the phases (and velocities) are written in.
struct ArmSpec {
  std::vector<double> lengths;
  std::vector<double> omegas;
  TorusState initial_phases;
  AngleConvention convention = AngleConvention::horizontal;

  ArmSpec() = default;
  ArmSpec(std::vector<double> lengths_, std::vector<double> omegas_, TorusState phases,
          AngleConvention conv = AngleConvention::horizontal)
      : lengths(std::move(lengths_)),
        omegas(std::move(omegas_)),
        initial_phases(std::move(phases)),
        convention(conv) {
    if (lengths.empty() || lengths.size() != omegas.size() ||
        lengths.size() != initial_phases.size())
      throw std::invalid_argument("ArmSpec: lengths, omegas and phases must have equal size >= 1");
    for (double l : lengths)
      if (!(l > 0.0)) throw std::invalid_argument("ArmSpec: joint lengths must be positive");
  }

  std::size_t joints() const { return lengths.size(); }
  double total_length() const {
    double s = 0.0;
    for (double l : lengths) s += l;
    return s;
  }
};

/// The same arm re-expressed in the other convention. Velocities follow
/// the same linear map as the angles (it commutes with the flow).
inline ArmSpec convert_arm(const ArmSpec& arm, AngleConvention to) {
  if (arm.convention == to) return arm;
  const std::size_t n = arm.joints();
  std::vector<double> w(n);
  if (to == AngleConvention::relative) {
    w[0] = arm.omegas[0];
    for (std::size_t j = 1; j < n; ++j) w[j] = arm.omegas[j] - arm.omegas[j - 1];
  } else {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += arm.omegas[j];
      w[j] = acc;
    }
  }
  return ArmSpec(arm.lengths, std::move(w), convert_angles(arm.initial_phases, arm.convention, to),
                 to);
}

/// Arm endpoint for horizontal-convention angles: sum of l_j e^{i theta_j}.
inline std::complex<double> psi(const TorusState& theta, const std::vector<double>& lengths) {
  if (theta.size() != lengths.size())
    throw std::invalid_argument("psi: angle and length dimensions differ");
  std::complex<double> z = 0.0;
  for (std::size_t j = 0; j < lengths.size(); ++j) z += std::polar(lengths[j], theta[j]);
  return z;
}

/// Endpoint curve z(t) of the arm under the linear flow: closed form per
/// time sample, no accumulated stepping error.
inline std::complex<double> end_curve(const ArmSpec& arm, double t) {
  const ArmSpec h = convert_arm(arm, AngleConvention::horizontal);
  return psi(advance(h.initial_phases, FlowSpec{h.omegas}, t), h.lengths);
}

/// One sample of the endpoint trajectory. `phi` is the continuous
/// (analytically continued) argument: through an exact zero of z it keeps
/// its real-analytic branch, so z == r e^{i phi} only up to the sign
/// absorbed by the passage.
struct PlanarSample {
  double t = 0.0;
  std::complex<double> z;
  double r = 0.0;    // |z|
  double phi = 0.0;  // unwrapped argument
};

/// Empirical asymptotic angular velocity with its convergence diagnostic:
/// `tail_spread` is the spread (max - min) of phi(t)/t over the final 10%
/// of the horizon.
struct WindingEstimate {
  double omega_hat = 0.0;
  double T = 0.0;
  double phi_T = 0.0;
  double tail_spread = 0.0;
};

/// Sampling control for trajectory unwrapping. The base step keeps every
/// joint's rotation below `max_angle_step` per sample; refinement halves
/// the step near zeros of z until `refine_limit * dt`.
struct StepPolicy {
  double max_angle_step = 0.05;  // rad per base step
  double r_min_rel = 1e-9;       // zero-tube radius, relative to total arm length
  double refine_limit = 0x1p-40; // h_min = dt * refine_limit
  std::uint64_t zero_march_budget = 100000;

  double base_dt(const std::vector<double>& omegas, double horizon) const {
    double wmax = 0.0;
    for (double w : omegas) wmax = std::max(wmax, std::abs(w));
    return wmax > 0.0 ? max_angle_step / wmax : horizon;
  }
};

namespace detail {

// Evaluates z(t) for a horizontal-convention arm without re-validating.
struct ArmCurve {
  const ArmSpec& arm;
  std::complex<double> operator()(double t) const {
    std::complex<double> z = 0.0;
    for (std::size_t j = 0; j < arm.joints(); ++j)
      z += std::polar(arm.lengths[j], arm.initial_phases[j] + arm.omegas[j] * t);
    return z;
  }
};

}  // namespace detail

/// Walks the endpoint trajectory on [0, T], maintaining the continuous
/// argument, and hands every accepted sample to `emit`. Returns the final
/// sample. Consecutive emitted samples satisfy |delta phi| < pi/2; exact
/// zero passages are resolved by matching the one-sided linear
/// extrapolation of phi and selecting the branch mod pi closest to it.
template <class Emit>
PlanarSample unwrap_scan(const ArmSpec& arm_any, double T, const StepPolicy& policy, Emit&& emit) {
  if (!(T > 0.0)) throw std::invalid_argument("unwrap_scan: horizon must be positive");
  const ArmSpec arm = convert_arm(arm_any, AngleConvention::horizontal);
  const detail::ArmCurve curve{arm};

  const double r_min = policy.r_min_rel * arm.total_length();
  const double dt = policy.base_dt(arm.omegas, T);
  const double h_min = dt * policy.refine_limit;
  const double near_zero = 1e-6 * arm.total_length();

  double t_prev = 0.0;
  std::complex<double> z_prev = curve(0.0);
  double phi_prev;

  if (std::abs(z_prev) >= r_min) {
    phi_prev = std::arg(z_prev);  // principal value in (-pi, pi]
  } else {
    // z(0) sits inside the zero tube: start at the first grid sample that
    // leaves it and backfill phi(0) with the right-hand analytic limit.
    double t0 = 0.0;
    std::complex<double> z0;
    std::uint64_t probes = 0;
    do {
      t0 += dt;
      z0 = curve(t0);
      if (++probes > policy.zero_march_budget || t0 > T)
        throw numerical_error("unwrap_scan: trajectory never leaves the zero tube "
                              "(degenerate arm, |z| stays below r_min)");
    } while (std::abs(z0) < r_min);
    const double phi0 = std::arg(z0);
    emit(PlanarSample{0.0, z_prev, std::abs(z_prev), phi0});
    t_prev = t0;
    z_prev = z0;
    phi_prev = phi0;
  }
  emit(PlanarSample{t_prev, z_prev, std::abs(z_prev), phi_prev});
  PlanarSample last{t_prev, z_prev, std::abs(z_prev), phi_prev};

  // 2nd-to-last accepted sample, for the one-sided slope at zero passages.
  double t_pp = t_prev, phi_pp = phi_prev;

  auto accept = [&](double t, std::complex<double> z, double phi) {
    t_pp = t_prev;
    phi_pp = phi_prev;
    t_prev = t;
    z_prev = z;
    phi_prev = phi;
    last = PlanarSample{t, z, std::abs(z), phi};
    emit(last);
  };

  const double t_anchor = t_prev;
  const std::uint64_t grid_steps =
      static_cast<std::uint64_t>(std::ceil((T - t_anchor) / dt - 1e-12));
  for (std::uint64_t k = 1; k <= grid_steps; ++k) {
    // A zero-passage march may already have advanced past this node.
    const double goal = std::min(t_anchor + dt * static_cast<double>(k), T);
    if (goal <= t_prev) continue;

    while (t_prev < goal) {
      double h = goal - t_prev;
      for (;;) {
        const double t_next = t_prev + h;
        const std::complex<double> z_next = curve(t_next);
        const double r_next = std::abs(z_next);
        const double delta = arg_delta(z_prev, z_next);
        if (std::abs(delta) < pi / 2 && r_next >= r_min) {
          accept(t_next, z_next, phi_prev + delta);
          break;
        }
        if (h > h_min) {
          h *= 0.5;
          continue;
        }
        if (r_next >= near_zero)
          throw numerical_error("unwrap_scan: |dphi| >= pi/2 persists at the minimum step away "
                                "from zeros of z; step policy too coarse for these frequencies");
        // Zero passage: march out of the tube, then re-anchor the branch.
        const double slope =
            (t_prev > t_pp) ? (phi_prev - phi_pp) / (t_prev - t_pp) : 0.0;
        double stride = h_min;
        double t_r = t_next;
        std::complex<double> z_r = z_next;
        std::uint64_t probes = 0;
        while (std::abs(z_r) < r_min) {
          t_r += stride;
          stride = std::min(stride * 2.0, dt / 8.0);
          z_r = curve(t_r);
          if (++probes > policy.zero_march_budget)
            throw numerical_error("unwrap_scan: zero-passage march exhausted its budget");
        }
        const double phi_ext = phi_prev + slope * (t_r - t_prev);
        const double raw = std::arg(z_r);
        const double branches = std::round((phi_ext - raw) / pi);
        accept(t_r, z_r, raw + pi * branches);
        break;
      }
    }
  }
  return last;
}

/// Materialized trajectory (prefer unwrap_scan for long horizons).
inline std::vector<PlanarSample> unwrap_argument(const ArmSpec& arm, double T,
                                                 const StepPolicy& policy = {}) {
  std::vector<PlanarSample> samples;
  samples.reserve(static_cast<std::size_t>(T / policy.base_dt(arm.omegas, T)) + 2);
  unwrap_scan(arm, T, policy, [&](const PlanarSample& s) { samples.push_back(s); });
  return samples;
}

/// Empirical asymptotic angular velocity phi(T)/T.
inline WindingEstimate estimate_omega(const ArmSpec& arm, double T,
                                      const StepPolicy& policy = {}) {
  double tail_lo = std::numeric_limits<double>::infinity();
  double tail_hi = -std::numeric_limits<double>::infinity();
  const double tail_start = 0.9 * T;
  const PlanarSample last = unwrap_scan(arm, T, policy, [&](const PlanarSample& s) {
    if (s.t >= tail_start && s.t > 0.0) {
      const double rate = s.phi / s.t;
      tail_lo = std::min(tail_lo, rate);
      tail_hi = std::max(tail_hi, rate);
    }
  });
  WindingEstimate est;
  est.T = last.t;
  est.phi_T = last.phi;
  est.omega_hat = last.phi / last.t;
  est.tail_spread = (tail_hi >= tail_lo) ? tail_hi - tail_lo : 0.0;
  return est;
}

/// The dominant-joint shortcut: when one length exceeds the sum of all
/// others, the limit velocity is that joint's velocity and phi stays
/// within O(1) of its linear growth.
inline std::optional<std::pair<std::size_t, double>> dominant_joint_omega(const ArmSpec& arm) {
  const double total = arm.total_length();
  for (std::size_t j = 0; j < arm.joints(); ++j)
    if (arm.lengths[j] > total - arm.lengths[j]) return std::make_pair(j, arm.omegas[j]);
  return std::nullopt;
}

/// Plane, three joints, horizontal-convention velocities: the asymptotic
/// velocity is the convex combination of the omegas weighted by the
/// triangle angles over pi, alpha_j opposite side l_j.
inline TrianglePrediction triangle_omega_euclidean(const std::array<double, 3>& lengths,
                                                   const std::array<double, 3>& omegas) {
  TrianglePrediction p;
  p.curvature_sign = CurvatureSign::Euclidean;
  p.lengths = lengths;
  p.angles = triangle_angles(CurvatureSign::Euclidean, lengths);
  p.area = triangle_area(CurvatureSign::Euclidean, p.angles, lengths);
  p.predicted_omega = 0.0;
  for (int j = 0; j < 3; ++j) p.predicted_omega += p.angles[j] / pi * omegas[j];
  return p;
}

/// Pass to the frame rotating with joint 1: the reduced arm has
/// omega_1 = 0 and any velocity computed there is shifted back by the
/// returned offset.
struct ReducedArm {
  ArmSpec arm;
  double offset = 0.0;
};

inline ReducedArm reduce_rotating_frame(const ArmSpec& arm_any) {
  const ArmSpec arm = convert_arm(arm_any, AngleConvention::horizontal);
  const double w1 = arm.omegas[0];
  std::vector<double> w(arm.joints());
  for (std::size_t j = 0; j < arm.joints(); ++j) w[j] = arm.omegas[j] - w1;
  return ReducedArm{ArmSpec(arm.lengths, std::move(w), arm.initial_phases,
                            AngleConvention::horizontal),
                    w1};
}

/// The two points of the reduced (theta_2, theta_3) torus where the arm
/// with theta_1 = 0 closes up (Psi = 0):
///   A = (-pi + a3, pi - a2),  B = (pi - a3, pi + a2) = -A (mod 2*pi).
inline std::pair<TorusState, TorusState> singular_positions(const std::array<double, 3>& lengths) {
  const auto a = triangle_angles(CurvatureSign::Euclidean, lengths);
  TorusState A({-pi + a[2], pi - a[1]});
  TorusState B({pi - a[2], pi + a[1]});
  return {A, B};
}

}  // namespace swivel
