#pragma once

#include <cstdint>

#include "scnr/digraph.hpp"
#include "scnr/polynomial.hpp"

namespace scnr {

/// Largest order the full 2^n enumeration accepts.
inline constexpr int kMaxExactOrder = 30;
/// Largest failure count served by the direct C(n, i) path (any n <= 64).
inline constexpr int kMaxDirectFailures = 6;

struct EngineOptions {
  int workers = 0;                  // 0: OpenMP default
  int max_order = kMaxExactOrder;   // may only lower the cap
};

/// min(options.max_order, kMaxExactOrder).
int exact_capacity(const EngineOptions& options);

/// Full F-vector by enumerating every nonempty operational set. OpenMP
/// parallel over blocks of the subset index; per-thread counters are summed,
/// so the result does not depend on the worker count.
/// Throws CapacityError when n exceeds exact_capacity(options).
ReliabilityPolynomial exact_scnr(const Digraph& g, const EngineOptions& options = {});

/// Serial reference: materializes every induced subdigraph and runs Tarjan on
/// it. Slow; kept for tests and benchmarks.
ReliabilityPolynomial exact_scnr_reference(const Digraph& g);

/// F_i alone. Uses the direct enumeration of i-subsets when i <= 6 (any n),
/// otherwise the full enumeration (n within capacity).
mpz_class scnr_coefficient(const Digraph& g, int i, const EngineOptions& options = {});

/// F_0..F_max_failures through the direct path. Requires max_failures <= 6.
std::vector<mpz_class> low_order_coefficients(const Digraph& g, int max_failures,
                                              const EngineOptions& options = {});

struct McEstimate {
  double p = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double estimate = 0;
  double std_error = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of Rel(g, p). Sample k draws its vertex states from a
/// SplitMix64 stream keyed by (seed, k), so results are reproducible for any
/// worker count.
McEstimate mc_scnr(const Digraph& g, double p, std::uint64_t samples, std::uint64_t seed,
                   const EngineOptions& options = {});

}  // namespace scnr
