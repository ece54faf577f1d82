#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "swivel/angles.hpp"

namespace swivel {

/// A point of the N-torus. Every component is kept reduced to [0, 2*pi).
class TorusState {
 public:
  TorusState() = default;

  explicit TorusState(std::vector<double> angles) : angles_(std::move(angles)) {
    if (angles_.empty()) throw std::invalid_argument("TorusState: need at least one angle");
    for (double& a : angles_) a = wrap_two_pi(a);
  }

  TorusState(std::initializer_list<double> angles) : TorusState(std::vector<double>(angles)) {}

  std::size_t size() const { return angles_.size(); }
  double operator[](std::size_t j) const { return angles_[j]; }
  const std::vector<double>& angles() const { return angles_; }

 private:
  std::vector<double> angles_;
};

/// Constant angular velocities of the linear torus flow, rad per unit time.
struct FlowSpec {
  std::vector<double> omegas;

  std::size_t size() const { return omegas.size(); }
};

/// Flow the torus point for time t. Closed form from t = 0: component j
/// becomes (theta_j + omega_j * t) mod 2*pi, so long horizons accumulate
/// no stepping error.
inline TorusState advance(const TorusState& state, const FlowSpec& flow, double t) {
  if (state.size() != flow.size())
    throw std::invalid_argument("advance: state and flow dimensions differ");
  if (!std::isfinite(t)) throw std::invalid_argument("advance: time must be finite");
  std::vector<double> out(state.size());
  for (std::size_t j = 0; j < state.size(); ++j)
    out[j] = wrap_two_pi(state[j] + flow.omegas[j] * t);
  return TorusState(std::move(out));
}

/// Outcome of the signed-sum degeneracy test. When degenerate, `witness`
/// holds the sign vector whose combination vanished and `value` the
/// offending sum.
struct SignedSumResult {
  bool nondegenerate = true;
  std::vector<int> witness;  // entries +1/-1, empty when nondegenerate
  double value = 0.0;

  explicit operator bool() const { return nondegenerate; }
};

inline double default_signed_sum_tol(const std::vector<double>& lengths) {
  double s = 0.0;
  for (double l : lengths) s += l;
  return 1e-9 * s;
}

/// Checks that no signed combination sum_j eps_j * l_j vanishes (within
/// tol). Enumerates all 2^N sign vectors, so N is capped at 24.
inline SignedSumResult signed_sum_nondegenerate(const std::vector<double>& lengths, double tol) {
  const std::size_t n = lengths.size();
  if (n == 0 || n > 24)
    throw std::invalid_argument("signed_sum_nondegenerate: need 1 <= N <= 24 lengths");
  if (!(tol > 0.0)) throw std::invalid_argument("signed_sum_nondegenerate: tol must be positive");
  for (double l : lengths)
    if (!(l > 0.0)) throw std::invalid_argument("signed_sum_nondegenerate: lengths must be positive");

  // Fixing eps_1 = +1 halves the enumeration (the sum is odd in eps).
  const std::uint32_t combos = 1u << (n - 1);
  for (std::uint32_t mask = 0; mask < combos; ++mask) {
    double sum = lengths[0];
    for (std::size_t j = 1; j < n; ++j)
      sum += (mask & (1u << (j - 1))) ? -lengths[j] : lengths[j];
    if (std::abs(sum) <= tol) {
      SignedSumResult r;
      r.nondegenerate = false;
      r.value = sum;
      r.witness.assign(n, +1);
      for (std::size_t j = 1; j < n; ++j)
        if (mask & (1u << (j - 1))) r.witness[j] = -1;
      return r;
    }
  }
  return SignedSumResult{};
}

inline SignedSumResult signed_sum_nondegenerate(const std::vector<double>& lengths) {
  return signed_sum_nondegenerate(lengths, default_signed_sum_tol(lengths));
}

/// Result of the small-coefficient rational-relation scan. "No relation
/// found" is advisory only: floating point cannot certify irrationality.
struct RationalIndependenceReport {
  bool relation_found = false;
  std::vector<long> coefficients;  // a nonzero integer vector with |sum k_j w_j| <= tol
  double residual = 0.0;
};

/// Exhaustively scans integer vectors k, 0 < ||k||_inf <= max_coeff, for
/// |sum_j k_j * omega_j| <= tol. N is capped at 4 (the scan is (2m+1)^N).
inline RationalIndependenceReport check_rational_independence(const std::vector<double>& omegas,
                                                              long max_coeff, double tol) {
  const std::size_t n = omegas.size();
  if (n == 0 || n > 4)
    throw std::invalid_argument("check_rational_independence: need 1 <= N <= 4 frequencies");
  if (max_coeff < 1) throw std::invalid_argument("check_rational_independence: max_coeff >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("check_rational_independence: tol must be positive");

  // One pass over the coefficient cube; among all relations within tol the
  // one with smallest max-norm wins (ties: smallest residual), so the
  // simplest relation is the one reported. k and -k name the same relation,
  // hence the first nonzero coefficient is kept positive.
  RationalIndependenceReport best;
  long best_norm = max_coeff + 1;
  best.residual = std::numeric_limits<double>::infinity();
  std::vector<long> k(n, -max_coeff);
  for (;;) {
    long norm = 0;
    bool lead_positive = false, lead_set = false;
    for (std::size_t j = 0; j < n; ++j) {
      norm = std::max(norm, std::abs(k[j]));
      if (!lead_set && k[j] != 0) {
        lead_set = true;
        lead_positive = k[j] > 0;
      }
    }
    if (lead_set && lead_positive && norm <= best_norm) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += static_cast<double>(k[j]) * omegas[j];
      const double res = std::abs(s);
      if (res <= tol && (norm < best_norm || res < best.residual)) {
        best.relation_found = true;
        best.coefficients = k;
        best.residual = res;
        best_norm = norm;
      }
    }
    std::size_t j = 0;
    while (j < n && k[j] == max_coeff) k[j++] = -max_coeff;
    if (j == n) break;
    ++k[j];
  }
  if (!best.relation_found) best.residual = 0.0;
  return best;
}

}  // namespace swivel
