#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scnr/digraph.hpp"
#include "scnr/polynomial.hpp"
#include "scnr/reliability.hpp"

namespace scnr {

enum class Leader { first, second, tie };

const char* to_string(Leader leader);

/// Outcome of comparing Rel(G) against Rel(H).
///
/// near_zero comes from the first index where the N-vectors differ (larger
/// N wins for p close to 0); near_one from the first index where the
/// F-vectors differ (larger F wins for p close to 1). `dominance` is the
/// exact sign profile of Rel(G) - Rel(H) on (0, 1).
struct ComparisonVerdict {
  Leader near_zero = Leader::tie;
  Leader near_one = Leader::tie;
  std::optional<int> near_zero_index;  // N-basis divergence
  std::optional<int> near_one_index;   // F-basis divergence
  SignProfile dominance;
};

ComparisonVerdict compare(const ReliabilityPolynomial& g, const ReliabilityPolynomial& h);

/// Throws InputError when the vertex counts differ.
ComparisonVerdict compare(const Digraph& g, const Digraph& h, const EngineOptions& options = {});

/// Sign-changing roots of Rel(G) - Rel(H) in (0, 1).
std::vector<RootInterval> find_crossings(const ReliabilityPolynomial& g,
                                         const ReliabilityPolynomial& h);
std::vector<RootInterval> find_crossings(const Digraph& g, const Digraph& h,
                                         const EngineOptions& options = {});

struct Contender {
  std::string label;
  Digraph graph;
};

struct RankedMember {
  std::string label;
  ReliabilityPolynomial poly;
};

/// Two members whose reliabilities cross, with the isolated crossings.
struct CrossingWitness {
  std::size_t first = 0;   // member index
  std::size_t second = 0;  // member index
  std::vector<RootInterval> crossings;
  SignStatus status = SignStatus::mixed;  // sign profile of first - second
};

struct SearchReport {
  std::string family;
  int order = 0;
  std::vector<RankedMember> members;         // input order
  std::vector<std::size_t> near_zero_ranking;
  std::vector<std::size_t> near_one_ranking;
  std::vector<std::size_t> winners;          // empty: no optimally-greatest member
  std::optional<CrossingWitness> witness;    // present whenever winners is empty
};

/// Decides whether some member weakly dominates every other member on all of
/// [0, 1]. Winners are declared only from exact sign profiles; rankings use
/// lexicographic N- (resp. F-) order with ties broken by F-vector, then input
/// order. Throws InputError on an empty list or mixed orders.
SearchReport tournament(std::string family, std::span<const Contender> members,
                        const EngineOptions& options = {});

/// Same as tournament() with precomputed polynomials.
SearchReport tournament(std::string family, std::vector<RankedMember> members,
                        const EngineOptions& options = {});

/// Tournament over enumerate_circulants(n), members labelled by canonical spec.
SearchReport search_circulants(int n, const EngineOptions& options = {});

}  // namespace scnr
