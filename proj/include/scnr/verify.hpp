#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scnr/reliability.hpp"

namespace scnr {

enum class ClaimStatus { pass, fail, skipped };

const char* to_string(ClaimStatus s);

struct ClaimResult {
  std::string claim;
  int order = 0;
  ClaimStatus status = ClaimStatus::pass;
  std::string detail;
  // Difference polynomials whose Sturm count was cross-checked by sampling.
  int differences_checked = 0;
  int sampling_disagreements = 0;
};

struct VerificationReport {
  std::vector<int> orders;
  std::vector<ClaimResult> claims;

  bool all_passed() const;
};

/// Rewrites a coefficient vector right after it is computed; used by tests to
/// inject faults. Arguments: claim name, order, coefficient vector.
using CoefficientTamper = std::function<void(std::string_view, int, std::vector<mpz_class>&)>;

struct VerifyOptions {
  EngineOptions engine;
  /// Claims that need the full 2^n enumeration are skipped above this order.
  int full_enumeration_limit = 22;
  CoefficientTamper tamper;
};

/// Orders exercised by default: every n in 5..15, plus 21.
std::vector<int> default_verification_orders();

/// Every claim applicable to each order, in a fixed order.
VerificationReport run_verification_suite(std::span<const int> orders,
                                          const VerifyOptions& options = {});

// Individual claims. Each returns one result for one order.

/// C_n has F_0 = 1, F_(n-1) = n and every other F_i = 0.
ClaimResult check_directed_cycle_formula(int n, const VerifyOptions& options = {});

/// N_2 equals the bundle count on the built-in families of order n.
ClaimResult check_bundle_coefficient_families(int n, const VerifyOptions& options = {});

/// N_2 equals the bundle count on `samples` random strongly connected
/// digraphs with 2 <= n <= max_order.
ClaimResult check_bundle_coefficient_random(int samples, int max_order, std::uint64_t seed,
                                            const VerifyOptions& options = {});

/// Rel(S_n) = (1-p) Rel(S_(n-1)) + p((1-p)^(n-1) + p) as polynomials.
ClaimResult check_star_recursion(int n, const VerifyOptions& options = {});

/// Rel(S_n) - Rel(G) >= 0 on (0, 1) for every strongly connected G with
/// 2n-2 arcs, by exhaustive arc-set enumeration.
ClaimResult check_star_dominance(int n, const VerifyOptions& options = {});

/// Rel(D_n) = Rel(S_n).
ClaimResult check_star_plus_arc(int n, const VerifyOptions& options = {});

/// For every 3 <= k <= n-1: F_1(H_k) = n-k+1 > F_1(G_k) = n-k, G_k leads near 0,
/// H_k leads near 1 and the two cross at least once in (0, 1).
ClaimResult check_sparse_nonexistence(int n, const VerifyOptions& options = {});

/// Even n = 2k: Γ(Z_n, {1, k+1}) has F_1 = n, F_2 = k(2k-2), and strictly the
/// largest F_2 among connected classes.
ClaimResult check_even_circulant(int n, const VerifyOptions& options = {});

/// Odd n. For 3 ∤ n: F_2 = n(n-3)/2, F_3 = C(n,3) - n(n-4), maximal F_4 and
/// strictly maximal F_5 for {1, 2·3^-1}. For 3 | n: maximal F_1..F_4 and
/// strictly maximal F_5 for {1, 3·2^-1}.
ClaimResult check_odd_circulant(int n, const VerifyOptions& options = {});

/// Every failure set of size <= 2 (even n) or <= 5 (odd n) that breaks
/// strong connectivity of the near-one circulant leaves a trivial subdigraph.
ClaimResult check_trivial_failure_lemma(int n, const VerifyOptions& options = {});

/// Tournament over connected circulant classes: no winner, the bundled cycle
/// leads near 0, the near-one spec leads near 1, and they cross.
ClaimResult check_no_optimal_circulant(int n, const VerifyOptions& options = {});

}  // namespace scnr
