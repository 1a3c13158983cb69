#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "scnr/error.hpp"
#include "scnr/families.hpp"
#include "scnr/reliability.hpp"

using namespace scnr;
using namespace scnr::families;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

std::vector<Arc> arcs_of(const Digraph& g) { return {g.arcs().begin(), g.arcs().end()}; }

}  // namespace

TEST_CASE("directed_cycle") {
  CHECK(arcs_of(directed_cycle(2)) == std::vector<Arc>{{0, 1}, {1, 0}});
  CHECK(count_bundles(directed_cycle(2)) == 1);
  const Digraph c5 = directed_cycle(5);
  CHECK(c5.size() == 5);
  CHECK(count_bundles(c5) == 0);
  CHECK(is_strongly_connected(c5));
  CHECK(exact_scnr(directed_cycle(3)).f_form() == ints({1, 0, 3, 0}));
  CHECK_THROWS_AS(directed_cycle(1), InputError);
}

TEST_CASE("bundled_star") {
  CHECK(exact_scnr(bundled_star(3)).f_form() == ints({1, 2, 3, 0}));
  const Digraph s4 = bundled_star(4);
  CHECK(s4.size() == 6);
  CHECK(count_bundles(s4) == 3);
  CHECK(arcs_of(s4) == std::vector<Arc>{{0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}});
  CHECK_THROWS_AS(bundled_star(1), InputError);
}

TEST_CASE("star_plus_arc") {
  const Digraph d3 = star_plus_arc(3);
  CHECK(d3.size() == 5);
  CHECK(d3.has_arc(1, 2));
  CHECK(is_strongly_connected(d3));
  CHECK(exact_scnr(star_plus_arc(4)) == exact_scnr(bundled_star(4)));
  CHECK_THROWS_AS(star_plus_arc(2), InputError);
}

TEST_CASE("g_family structure") {
  const Digraph g = g_family(10, 8);
  CHECK(g.size() == 12);
  CHECK(count_bundles(g) == 2);
  CHECK(g_family(5, 4).size() == 6);
  CHECK(count_bundles(g_family(5, 4)) == 1);
  // Working 3-sets: the 3-cycle plus hub with any two of the three pendants.
  CHECK(exact_scnr(g_family(6, 3)).n_form()[3] == 4);
  CHECK(oracle::f_vector(g_family(6, 3))[3] == 4);
  for (int n = 4; n <= 12; ++n) {
    for (int k = 3; k < n; ++k) {
      const Digraph gk = g_family(n, k);
      REQUIRE(gk.size() == static_cast<std::size_t>(2 * n - k));
      REQUIRE(count_bundles(gk) == n - k);
      REQUIRE(is_strongly_connected(gk));
    }
  }
  CHECK_THROWS_AS(g_family(5, 2), InputError);
  CHECK_THROWS_AS(g_family(5, 5), InputError);
}

TEST_CASE("h_family structure") {
  const Digraph h = h_family(10, 8);
  CHECK(h.size() == 12);
  CHECK(exact_scnr(h).F(1) == 3);
  CHECK(h_family(5, 3).size() == 7);
  CHECK(exact_scnr(h_family(5, 3)).F(1) == 3);
  CHECK(h_family(6, 5).size() == 7);
  CHECK(is_strongly_connected(h_family(6, 5)));
  CHECK(h_family(5, 3).has_arc(1, 0));
  for (int n = 4; n <= 12; ++n) {
    for (int k = 3; k < n; ++k) {
      const Digraph hk = h_family(n, k);
      REQUIRE(hk.size() == static_cast<std::size_t>(2 * n - k));
      REQUIRE(count_bundles(hk) == 0);
      REQUIRE(is_strongly_connected(hk));
      REQUIRE(exact_scnr(hk).F(1) == n - k + 1);
    }
  }
  CHECK_THROWS_AS(h_family(5, 2), InputError);
  CHECK_THROWS_AS(h_family(5, 5), InputError);
}

TEST_CASE("circulant") {
  const Digraph g = circulant(9, std::array{1, 3});
  CHECK(g.size() == 18);
  for (int v = 0; v < 9; ++v) {
    CHECK(g.out_neighbours(v).count() == 2);
    CHECK(g.in_neighbours(v).count() == 2);
  }
  const Digraph h = circulant(8, std::array{1, 5});
  CHECK(h.has_arc(0, 1));
  CHECK(h.has_arc(0, 5));
  CHECK(h.has_arc(7, 4));
  CHECK(count_bundles(circulant(7, std::array{1, 6})) == 7);
  CHECK_THROWS_AS(circulant(8, std::array{0, 3}), InputError);
  CHECK_THROWS_AS(circulant(8, std::array{1, 8}), InputError);
  CHECK_THROWS_AS(circulant(8, std::vector<int>{}), InputError);
}

TEST_CASE("circulant connectivity matches gcd and rotation preserves arcs") {
  for (int n = 3; n <= 20; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const Digraph g = circulant(n, std::array{a, b});
        REQUIRE(is_strongly_connected(g) == (std::gcd(std::gcd(n, a), b) == 1));
        for (const Arc& arc : g.arcs()) REQUIRE(g.has_arc((arc.from + 1) % n, (arc.to + 1) % n));
      }
    }
  }
}
