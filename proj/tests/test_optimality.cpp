#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scnr/circulant.hpp"
#include "scnr/combinations.hpp"
#include "scnr/error.hpp"
#include "scnr/families.hpp"
#include "scnr/optimality.hpp"

using namespace scnr;

namespace {

mpq_class q(long num, long den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

/// Every strongly connected digraph on n vertices with m arcs.
std::vector<Digraph> strong_digraphs(int n, int m) {
  std::vector<Arc> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) slots.push_back({u, v});
    }
  }
  std::vector<Digraph> out;
  for_each_subset(static_cast<int>(slots.size()), m, [&](VertexSet chosen) {
    std::vector<Arc> arcs;
    for (int i : chosen.members()) arcs.push_back(slots[i]);
    Digraph g(n, std::move(arcs));
    if (oracle::strongly_connected(g)) out.push_back(std::move(g));
  });
  return out;
}

}  // namespace

TEST_CASE("compare bundled cycle against {1,5} on Z_8") {
  const Digraph g = CirculantSpec(8, 1, 7).to_digraph();
  const Digraph h = CirculantSpec(8, 1, 5).to_digraph();
  const ComparisonVerdict v = compare(g, h);
  CHECK(v.near_zero == Leader::first);
  CHECK(v.near_zero_index == 2);
  CHECK(v.near_one == Leader::second);
  CHECK(v.near_one_index == 2);
  CHECK(v.dominance.status == SignStatus::mixed);
  CHECK(find_crossings(g, h).size() >= 1);
}

TEST_CASE("compare a digraph with itself") {
  const Digraph g = families::h_family(7, 4);
  const ComparisonVerdict v = compare(g, g);
  CHECK(v.near_zero == Leader::tie);
  CHECK(v.near_one == Leader::tie);
  CHECK_FALSE(v.near_zero_index);
  CHECK(v.dominance.status == SignStatus::identically_zero);
  CHECK(find_crossings(g, g).empty());
}

TEST_CASE("compare G_8 and H_8 on 10 vertices") {
  const ComparisonVerdict v = compare(families::g_family(10, 8), families::h_family(10, 8));
  CHECK(v.near_one == Leader::second);
  CHECK(v.near_one_index == 1);
  CHECK(v.near_zero == Leader::first);
}

TEST_CASE("compare rejects mismatched orders") {
  CHECK_THROWS_AS(compare(families::directed_cycle(4), families::directed_cycle(5)), InputError);
  CHECK_THROWS_AS(find_crossings(families::directed_cycle(4), families::directed_cycle(5)),
                  InputError);
}

TEST_CASE("S_4 dominates every strongly connected 4-vertex digraph with 6 arcs") {
  const Digraph star = families::bundled_star(4);
  const auto all = strong_digraphs(4, 6);
  CHECK(all.size() > 0);
  for (const Digraph& g : all) {
    REQUIRE(find_crossings(star, g).empty());
    REQUIRE(compare(star, g).dominance.non_negative());
  }
}

TEST_CASE("verdict antisymmetry and consistency near 0") {
  std::mt19937_64 rng(41);
  const mpq_class eps = q(1, 1000000);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 6;
    const Digraph g = oracle::random_strong_digraph(rng, n, 0.25);
    const Digraph h = oracle::random_strong_digraph(rng, n, 0.25);
    const auto pg = exact_scnr(g);
    const auto ph = exact_scnr(h);
    const ComparisonVerdict gh = compare(pg, ph);
    const ComparisonVerdict hg = compare(ph, pg);
    REQUIRE((gh.near_zero == Leader::first) == (hg.near_zero == Leader::second));
    REQUIRE((gh.near_one == Leader::first) == (hg.near_one == Leader::second));
    const PowerPoly d = to_power_basis(pg) - to_power_basis(ph);
    if (gh.near_zero == Leader::first) REQUIRE(d(eps) > 0);
    if (gh.near_zero == Leader::second) REQUIRE(d(eps) < 0);
    if (gh.near_one == Leader::first) REQUIRE(d(1 - eps) > 0);
    if (gh.near_one == Leader::second) REQUIRE(d(1 - eps) < 0);
    if (gh.near_zero == Leader::tie && gh.near_one == Leader::tie) {
      REQUIRE(gh.dominance.status == SignStatus::identically_zero);
    }
    // Index-wise N-dominance forces a non-negative difference.
    const auto ng = pg.n_form();
    const auto nh = ph.n_form();
    bool dominates = true;
    for (std::size_t i = 0; i < ng.size(); ++i) dominates = dominates && ng[i] >= nh[i];
    if (dominates) REQUIRE(gh.dominance.non_negative());
    REQUIRE(gh.dominance.sign_changes() == sampled_sign_changes(d));
  }
}

TEST_CASE("tournament over circulants of order 8") {
  const SearchReport r = search_circulants(8);
  CHECK(r.winners.empty());
  REQUIRE(r.witness);
  CHECK(r.members[r.witness->first].label == "{1,7}");
  CHECK(r.members[r.witness->second].label == "{1,5}");
  CHECK(r.witness->crossings.size() >= 1);
  CHECK(r.members[r.near_zero_ranking.front()].label == "{1,7}");
  CHECK(r.members[r.near_one_ranking.front()].label == "{1,5}");
}

TEST_CASE("tournament edge cases") {
  const Contender solo{"C_5", families::directed_cycle(5)};
  const SearchReport single = tournament("solo", std::span<const Contender>(&solo, 1));
  CHECK(single.winners == std::vector<std::size_t>{0});
  CHECK_FALSE(single.witness);

  const std::vector<Contender> gh{{"G_3", families::g_family(6, 3)},
                                  {"H_3", families::h_family(6, 3)}};
  const SearchReport sparse = tournament("sparse", gh);
  CHECK(sparse.winners.empty());
  REQUIRE(sparse.witness);
  CHECK(sparse.witness->crossings.size() >= 1);

  CHECK_THROWS_AS(tournament("empty", std::span<const Contender>()), InputError);
  const std::vector<Contender> mixed{{"a", families::directed_cycle(4)},
                                     {"b", families::directed_cycle(5)}};
  CHECK_THROWS_AS(tournament("mixed", mixed), InputError);
}

TEST_CASE("tournament finds a winner that dominates everything") {
  const std::vector<Contender> members{{"S_4", families::bundled_star(4)},
                                       {"C_4", families::directed_cycle(4)},
                                       {"D_4", families::star_plus_arc(4)}};
  const SearchReport r = tournament("stars", members);
  CHECK(r.winners == std::vector<std::size_t>{0, 2});
  CHECK_FALSE(r.witness);
}

TEST_CASE("search over order 4 lists the small class list") {
  const SearchReport r = search_circulants(4);
  CHECK(r.members.size() == enumerate_circulants(4).size());
}

TEST_CASE("reports do not depend on worker count") {
  EngineOptions one;
  one.workers = 1;
  EngineOptions many;
  many.workers = 8;
  const SearchReport a = search_circulants(12, one);
  const SearchReport b = search_circulants(12, many);
  CHECK(a.near_zero_ranking == b.near_zero_ranking);
  CHECK(a.near_one_ranking == b.near_one_ranking);
  CHECK(a.winners == b.winners);
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  CHECK(a.witness->crossings == b.witness->crossings);
}
