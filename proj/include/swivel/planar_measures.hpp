#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "swivel/angles.hpp"
#include "swivel/errors.hpp"
#include "swivel/parallel.hpp"
#include "swivel/planar_arm.hpp"
#include "swivel/rng.hpp"
#include "swivel/torus_flow.hpp"

namespace swivel {

namespace detail {

inline constexpr std::uint64_t mc_chunk = 1u << 16;

template <class PerSample>
void mc_sweep(std::uint64_t samples, PerSample&& body) {
  const std::uint64_t chunks = (samples + mc_chunk - 1) / mc_chunk;
  parallel_for_chunks(chunks, [&](std::size_t c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * mc_chunk;
    const std::uint64_t hi = std::min(samples, lo + mc_chunk);
    for (std::uint64_t i = lo; i < hi; ++i) body(c, i);
  });
}

}  // namespace detail

/// Monte Carlo estimate of the torus measure
///   q_k = mes { theta : | sum_{j != k} l_j e^{i theta_j} | < l_k }.
/// theta_k itself never enters the condition, so only N-1 angles are
/// sampled. Deterministic for a fixed seed regardless of thread count.
inline MonteCarloEstimate measure_qk(const std::vector<double>& lengths, std::size_t k,
                                     std::uint64_t samples, std::uint64_t seed) {
  const std::size_t n = lengths.size();
  if (n < 2 || k >= n) throw std::invalid_argument("measure_qk: need N >= 2 and k < N");
  if (samples < 10000) throw std::invalid_argument("measure_qk: need at least 1e4 samples");
  if (!signed_sum_nondegenerate(lengths))
    throw std::domain_error("measure_qk: lengths admit a vanishing signed sum");

  const CounterRng rng = CounterRng{seed, 0}.substream(k + 1);
  const std::uint64_t chunks = (samples + detail::mc_chunk - 1) / detail::mc_chunk;
  std::vector<std::uint64_t> hits(chunks, 0);

  detail::mc_sweep(samples, [&](std::size_t c, std::uint64_t i) {
    std::complex<double> rest = 0.0;
    std::uint64_t ctr = i * (n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      rest += std::polar(lengths[j], rng.uniform(ctr++, 0.0, two_pi));
    }
    if (std::abs(rest) < lengths[k]) ++hits[c];
  });

  std::uint64_t total = 0;
  for (std::uint64_t h : hits) total += h;
  const double p = static_cast<double>(total) / static_cast<double>(samples);
  MonteCarloEstimate est;
  est.value = p;
  est.half_width = z_99 * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(samples));
  est.samples = samples;
  est.seed = seed;
  return est;
}

/// Predicted asymptotic velocity for a nondegenerate N-joint arm on the
/// plane: sum of q_k * omega_k with Monte Carlo q_k. The half-width
/// combines the per-coefficient half-widths in quadrature.
struct MeasurePrediction {
  MonteCarloEstimate estimate;
  std::vector<MonteCarloEstimate> coefficients;  // q_k
};

inline MeasurePrediction hkw_omega_n(const std::vector<double>& lengths,
                                     const std::vector<double>& omegas, std::uint64_t samples,
                                     std::uint64_t seed) {
  const std::size_t n = lengths.size();
  if (n < 2 || omegas.size() != n)
    throw std::invalid_argument("hkw_omega_n: need N >= 2 and matching omegas");
  const auto gate = signed_sum_nondegenerate(lengths);
  if (!gate) throw std::domain_error("hkw_omega_n: lengths admit a vanishing signed sum");

  MeasurePrediction out;
  double value = 0.0, var = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    MonteCarloEstimate qk = measure_qk(lengths, k, samples, seed);
    value += qk.value * omegas[k];
    var += (qk.half_width * omegas[k]) * (qk.half_width * omegas[k]);
    out.coefficients.push_back(qk);
  }
  out.estimate.value = value;
  out.estimate.half_width = std::sqrt(var);
  out.estimate.samples = samples;
  out.estimate.seed = seed;
  return out;
}

/// Monte Carlo space average of
///   f(theta) = Re( sum l_j w_j e^{i theta_j} / sum l_j e^{i theta_j} )
/// over the N-torus. Draws landing within r_min of the arm closure
/// (Psi = 0) are rejected and redrawn; the result reports how many.
struct SpaceAverageResult {
  MonteCarloEstimate estimate;
  std::uint64_t rejected = 0;
};

inline SpaceAverageResult space_average_f(const std::vector<double>& lengths,
                                          const std::vector<double>& omegas,
                                          std::uint64_t samples, std::uint64_t seed) {
  const std::size_t n = lengths.size();
  if (n == 0 || omegas.size() != n)
    throw std::invalid_argument("space_average_f: need matching lengths and omegas");
  if (samples < 10000) throw std::invalid_argument("space_average_f: need at least 1e4 samples");
  if (!signed_sum_nondegenerate(lengths))
    throw std::domain_error("space_average_f: lengths admit a vanishing signed sum");

  double total = 0.0;
  for (double l : lengths) total += l;
  const double r_min = 1e-9 * total;
  constexpr std::uint64_t attempts_per_sample = 64;

  const CounterRng rng = CounterRng{seed, 0}.substream(0x5face);
  const std::uint64_t chunks = (samples + detail::mc_chunk - 1) / detail::mc_chunk;
  std::vector<double> sums(chunks, 0.0), sq_sums(chunks, 0.0);
  std::vector<std::uint64_t> rejects(chunks, 0);

  detail::mc_sweep(samples, [&](std::size_t c, std::uint64_t i) {
    for (std::uint64_t a = 0; a < attempts_per_sample; ++a) {
      std::uint64_t ctr = (i * attempts_per_sample + a) * n;
      std::complex<double> den = 0.0, num = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const std::complex<double> e = std::polar(lengths[j], rng.uniform(ctr++, 0.0, two_pi));
        den += e;
        num += omegas[j] * e;
      }
      if (std::abs(den) < r_min) {
        ++rejects[c];
        continue;
      }
      const double f = (num / den).real();
      sums[c] += f;
      sq_sums[c] += f * f;
      return;
    }
    throw numerical_error("space_average_f: rejection budget exhausted near Psi = 0");
  });

  double sum = 0.0, sq = 0.0;
  std::uint64_t rej = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    sum += sums[c];
    sq += sq_sums[c];
    rej += rejects[c];
  }
  const double mean = sum / static_cast<double>(samples);
  const double var =
      std::max(0.0, sq / static_cast<double>(samples) - mean * mean);
  SpaceAverageResult out;
  out.estimate.value = mean;
  out.estimate.half_width = z_99 * std::sqrt(var / static_cast<double>(samples));
  out.estimate.samples = samples;
  out.estimate.seed = seed;
  out.rejected = rej;
  return out;
}

}  // namespace swivel
