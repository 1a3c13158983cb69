#include "scnr/reliability.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "scnr/combinations.hpp"
#include "scnr/error.hpp"

namespace scnr {

namespace {

int thread_count(const EngineOptions& options) {
  return options.workers > 0 ? options.workers : omp_get_max_threads();
}

void require_capacity(const Digraph& g, const EngineOptions& options) {
  if (g.order() > exact_capacity(options)) {
    throw CapacityError("exact enumeration supports at most " +
                        std::to_string(exact_capacity(options)) + " vertices; got " +
                        std::to_string(g.order()));
  }
}

ReliabilityPolynomial from_counts(int n, const std::vector<std::uint64_t>& counts) {
  std::vector<mpz_class> f(n + 1);
  for (int i = 0; i <= n; ++i) {
    mpz_import(f[i].get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &counts[i]);
  }
  return ReliabilityPolynomial(n, std::move(f));
}

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next() { return mix64(state_ += 0x9E3779B97F4A7C15ULL); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace

int exact_capacity(const EngineOptions& options) {
  return std::min(options.max_order, kMaxExactOrder);
}

ReliabilityPolynomial exact_scnr(const Digraph& g, const EngineOptions& options) {
  require_capacity(g, options);
  const int n = g.order();
  const auto out = g.out_masks();
  const auto in = g.in_masks();

  // Blocks are indexed by the high bits of the operational mask.
  const int low_bits = n > 10 ? n - 10 : 0;
  const std::int64_t blocks = std::int64_t{1} << (n - low_bits);
  const std::uint64_t block_size = std::uint64_t{1} << low_bits;

  std::vector<std::uint64_t> counts(n + 1, 0);
#pragma omp parallel num_threads(thread_count(options))
  {
    std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t block = 0; block < blocks; ++block) {
      const std::uint64_t base = static_cast<std::uint64_t>(block) << low_bits;
      for (std::uint64_t low = 0; low < block_size; ++low) {
        const std::uint64_t alive = base | low;
        if (induces_strongly_connected(out, in, alive)) ++local[n - std::popcount(alive)];
      }
    }
#pragma omp critical(scnr_exact_merge)
    for (int i = 0; i <= n; ++i) counts[i] += local[i];
  }
  return from_counts(n, counts);
}

ReliabilityPolynomial exact_scnr_reference(const Digraph& g) {
  if (g.order() > kMaxExactOrder) {
    throw CapacityError("exact enumeration supports at most " + std::to_string(kMaxExactOrder) +
                        " vertices");
  }
  const int n = g.order();
  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t alive = 1; alive < total; ++alive) {
    if (is_strongly_connected(induced_subdigraph(g, VertexSet(alive)))) {
      ++counts[n - std::popcount(alive)];
    }
  }
  return from_counts(n, counts);
}

std::vector<mpz_class> low_order_coefficients(const Digraph& g, int max_failures,
                                              const EngineOptions& options) {
  const int n = g.order();
  if (max_failures < 0 || max_failures > kMaxDirectFailures) {
    throw CapacityError("direct enumeration handles at most " +
                        std::to_string(kMaxDirectFailures) + " failures");
  }
  const auto out = g.out_masks();
  const auto in = g.in_masks();
  const std::uint64_t all = g.vertices().bits();
  const int top = std::min(max_failures, n);

  std::vector<mpz_class> f(max_failures + 1);
  f[0] = induces_strongly_connected(out, in, all) ? 1 : 0;
  for (int i = 1; i <= top; ++i) {
    std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count) num_threads(thread_count(options))
    for (int first = 0; first <= n - i; ++first) {
      for_each_subset(n, i - 1, first + 1, VertexSet::single(first), [&](VertexSet failed) {
        if (induces_strongly_connected(out, in, all & ~failed.bits())) ++count;
      });
    }
    f[i] = mpz_class(std::to_string(count));
  }
  return f;
}

mpz_class scnr_coefficient(const Digraph& g, int i, const EngineOptions& options) {
  const int n = g.order();
  if (i < 0 || i > n) {
    throw InputError("coefficient index " + std::to_string(i) + " outside [0, " +
                     std::to_string(n) + "]");
  }
  if (i <= kMaxDirectFailures) return low_order_coefficients(g, i, options)[i];
  if (n > exact_capacity(options)) {
    throw CapacityError("F_" + std::to_string(i) + " of a " + std::to_string(n) +
                        "-vertex digraph needs either i <= " + std::to_string(kMaxDirectFailures) +
                        " or n <= " + std::to_string(exact_capacity(options)));
  }
  return exact_scnr(g, options).F(i);
}

McEstimate mc_scnr(const Digraph& g, double p, std::uint64_t samples, std::uint64_t seed,
                   const EngineOptions& options) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("p = " + std::to_string(p) + " outside [0, 1]");
  if (samples == 0) throw InputError("at least one sample is required");
  const int n = g.order();
  const auto out = g.out_masks();
  const auto in = g.in_masks();
  const std::int64_t total = static_cast<std::int64_t>(samples);

  std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) num_threads(thread_count(options))
  for (std::int64_t k = 0; k < total; ++k) {
    SplitMix64 rng(mix64(seed ^ mix64(static_cast<std::uint64_t>(k))));
    std::uint64_t alive = 0;
    for (int v = 0; v < n; ++v) {
      if (rng.uniform() < p) alive |= std::uint64_t{1} << v;
    }
    if (induces_strongly_connected(out, in, alive)) ++hits;
  }

  McEstimate est;
  est.p = p;
  est.samples = samples;
  est.hits = hits;
  est.seed = seed;
  est.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
  return est;
}

}  // namespace scnr
