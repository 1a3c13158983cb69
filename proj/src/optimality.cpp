#include "scnr/optimality.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "scnr/circulant.hpp"
#include "scnr/error.hpp"

namespace scnr {

const char* to_string(Leader leader) {
  switch (leader) {
    case Leader::first: return "G";
    case Leader::second: return "H";
    case Leader::tie: return "tie";
  }
  return "?";
}

namespace {

/// First index where the vectors differ and which side is larger there.
std::pair<Leader, std::optional<int>> lexicographic_leader(const std::vector<mpz_class>& g,
                                                           const std::vector<mpz_class>& h) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != h[i]) return {g[i] > h[i] ? Leader::first : Leader::second, static_cast<int>(i)};
  }
  return {Leader::tie, std::nullopt};
}

std::vector<RootInterval> crossings_of(const SignProfile& profile) {
  std::vector<RootInterval> out;
  for (const auto& r : profile.roots) {
    if (r.sign_change) out.push_back(r);
  }
  return out;
}

/// a > b in lexicographic order.
bool lex_greater(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

int thread_count(const EngineOptions& options) {
  return options.workers > 0 ? options.workers : omp_get_max_threads();
}

}  // namespace

ComparisonVerdict compare(const ReliabilityPolynomial& g, const ReliabilityPolynomial& h) {
  if (g.order() != h.order()) {
    throw InputError("cannot compare digraphs of order " + std::to_string(g.order()) + " and " +
                     std::to_string(h.order()));
  }
  ComparisonVerdict verdict;
  std::tie(verdict.near_zero, verdict.near_zero_index) = lexicographic_leader(g.n_form(), h.n_form());
  std::tie(verdict.near_one, verdict.near_one_index) = lexicographic_leader(g.f_form(), h.f_form());
  verdict.dominance = sign_profile(to_power_basis(g) - to_power_basis(h));
  return verdict;
}

ComparisonVerdict compare(const Digraph& g, const Digraph& h, const EngineOptions& options) {
  if (g.order() != h.order()) {
    throw InputError("cannot compare digraphs of order " + std::to_string(g.order()) + " and " +
                     std::to_string(h.order()));
  }
  return compare(exact_scnr(g, options), exact_scnr(h, options));
}

std::vector<RootInterval> find_crossings(const ReliabilityPolynomial& g,
                                         const ReliabilityPolynomial& h) {
  if (g.order() != h.order()) {
    throw InputError("cannot compare digraphs of order " + std::to_string(g.order()) + " and " +
                     std::to_string(h.order()));
  }
  return crossings_of(sign_profile(to_power_basis(g) - to_power_basis(h)));
}

std::vector<RootInterval> find_crossings(const Digraph& g, const Digraph& h,
                                         const EngineOptions& options) {
  if (g.order() != h.order()) {
    throw InputError("cannot compare digraphs of order " + std::to_string(g.order()) + " and " +
                     std::to_string(h.order()));
  }
  return find_crossings(exact_scnr(g, options), exact_scnr(h, options));
}

SearchReport tournament(std::string family, std::vector<RankedMember> members,
                        const EngineOptions& options) {
  if (members.empty()) throw InputError("tournament needs at least one member");
  const int n = members.front().poly.order();
  for (const auto& m : members) {
    if (m.poly.order() != n) throw InputError("tournament members must share one order");
  }

  SearchReport report;
  report.family = std::move(family);
  report.order = n;
  report.members = std::move(members);
  const auto& ms = report.members;

  std::vector<std::vector<mpz_class>> n_forms;
  n_forms.reserve(ms.size());
  for (const auto& m : ms) n_forms.push_back(m.poly.n_form());

  std::vector<std::size_t> order(ms.size());
  std::iota(order.begin(), order.end(), 0);
  report.near_one_ranking = order;
  std::stable_sort(report.near_one_ranking.begin(), report.near_one_ranking.end(),
                   [&](std::size_t a, std::size_t b) {
                     return lex_greater(ms[a].poly.f_form(), ms[b].poly.f_form());
                   });
  report.near_zero_ranking = order;
  std::stable_sort(report.near_zero_ranking.begin(), report.near_zero_ranking.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (n_forms[a] != n_forms[b]) return lex_greater(n_forms[a], n_forms[b]);
                     return lex_greater(ms[a].poly.f_form(), ms[b].poly.f_form());
                   });

  const std::size_t zero_leader = report.near_zero_ranking.front();
  const std::size_t one_leader = report.near_one_ranking.front();
  if (!(ms[zero_leader].poly == ms[one_leader].poly)) {
    // Different leaders at the two ends force a crossing between them.
    const SignProfile profile =
        sign_profile(to_power_basis(ms[zero_leader].poly) - to_power_basis(ms[one_leader].poly));
    report.witness = CrossingWitness{zero_leader, one_leader, crossings_of(profile), profile.status};
    return report;
  }

  // The common leader is the only candidate; check it against every distinct
  // polynomial exactly.
  const std::size_t candidate = one_leader;
  const PowerPoly candidate_power = to_power_basis(ms[candidate].poly);
  std::vector<std::size_t> rivals;
  for (std::size_t j = 0; j < ms.size(); ++j) {
    if (!(ms[j].poly == ms[candidate].poly)) rivals.push_back(j);
  }
  std::vector<SignProfile> profiles(rivals.size());
  const auto rival_count = static_cast<std::int64_t>(rivals.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(options))
  for (std::int64_t r = 0; r < rival_count; ++r) {
    profiles[r] = sign_profile(candidate_power - to_power_basis(ms[rivals[r]].poly));
  }
  for (std::size_t r = 0; r < rivals.size(); ++r) {
    if (!profiles[r].non_negative()) {
      report.witness =
          CrossingWitness{candidate, rivals[r], crossings_of(profiles[r]), profiles[r].status};
      return report;
    }
  }
  for (std::size_t j = 0; j < ms.size(); ++j) {
    if (ms[j].poly == ms[candidate].poly) report.winners.push_back(j);
  }
  return report;
}

SearchReport tournament(std::string family, std::span<const Contender> members,
                        const EngineOptions& options) {
  if (members.empty()) throw InputError("tournament needs at least one member");
  std::vector<RankedMember> ranked;
  ranked.reserve(members.size());
  for (const auto& c : members) {
    if (c.graph.order() != members.front().graph.order()) {
      throw InputError("tournament members must share one order");
    }
    ranked.push_back({c.label, exact_scnr(c.graph, options)});
  }
  return tournament(std::move(family), std::move(ranked), options);
}

SearchReport search_circulants(int n, const EngineOptions& options) {
  std::vector<Contender> contenders;
  for (const auto& cls : enumerate_circulants(n)) {
    contenders.push_back({cls.canonical.label(), cls.canonical.to_digraph()});
  }
  return tournament("circulant", contenders, options);
}

}  // namespace scnr
