#include "scnr/circulant.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <utility>

#include "scnr/error.hpp"
#include "scnr/families.hpp"

namespace scnr {

CirculantSpec::CirculantSpec(int n, int a, int b) : n_(n), a_(std::min(a, b)), b_(std::max(a, b)) {
  if (n < 3 || n > kMaxVertices) throw InputError("circulant order must lie in 3..64");
  if (a_ < 1 || b_ > n - 1) {
    throw InputError("connection set {" + std::to_string(a) + "," + std::to_string(b) +
                     "} must lie in 1.." + std::to_string(n - 1));
  }
  if (a_ == b_) throw InputError("connection set needs two distinct elements");
}

Digraph CirculantSpec::to_digraph() const {
  const std::array<int, 2> steps{a_, b_};
  return families::circulant(n_, steps);
}

std::string CirculantSpec::label() const {
  return "{" + std::to_string(a_) + "," + std::to_string(b_) + "}";
}

int mod_inverse(int x, int n) {
  if (n < 2) throw InputError("modulus must be at least 2");
  // Extended Euclid on (x mod n, n).
  long long r0 = ((x % n) + n) % n, r1 = n;
  long long s0 = 1, s1 = 0;
  while (r1 != 0) {
    const long long q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != 1) {
    throw InputError(std::to_string(x) + " has no inverse modulo " + std::to_string(n) +
                     " (gcd " + std::to_string(r0) + ")");
  }
  return static_cast<int>(((s0 % n) + n) % n);
}

bool is_connected_circulant(const CirculantSpec& spec) {
  return std::gcd(std::gcd(spec.order(), spec.a()), spec.b()) == 1;
}

namespace {

std::vector<int> units(int n) {
  std::vector<int> out;
  for (int u = 1; u < n; ++u) {
    if (std::gcd(u, n) == 1) out.push_back(u);
  }
  return out;
}

/// Image of spec under multiplication by u, or nullopt when it collapses.
std::optional<CirculantSpec> scaled(const CirculantSpec& spec, int u) {
  const int n = spec.order();
  const int a = static_cast<int>((1LL * u * spec.a()) % n);
  const int b = static_cast<int>((1LL * u * spec.b()) % n);
  if (a == 0 || b == 0 || a == b) return std::nullopt;
  return CirculantSpec(n, a, b);
}

}  // namespace

std::optional<int> adam_multiplier(const CirculantSpec& s1, const CirculantSpec& s2) {
  if (s1.order() != s2.order()) {
    throw InputError("Ádám equivalence needs equal orders (" + std::to_string(s1.order()) +
                     " vs " + std::to_string(s2.order()) + ")");
  }
  for (int u : units(s1.order())) {
    if (scaled(s1, u) == s2) return u;
  }
  return std::nullopt;
}

CirculantClass canonical_class(const CirculantSpec& spec) {
  std::set<CirculantSpec> orbit;
  for (int u : units(spec.order())) {
    // Units are bijections on Z_n \ {0}, so the image is always a valid pair.
    orbit.insert(*scaled(spec, u));
  }
  return CirculantClass{*orbit.begin(), {orbit.begin(), orbit.end()}};
}

std::vector<CirculantClass> enumerate_circulants(int n) {
  if (n < 3) throw InputError("circulant enumeration needs n >= 3");
  std::vector<CirculantClass> classes;
  std::set<CirculantSpec> seen;
  for (int a = 1; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const CirculantSpec spec(n, a, b);
      if (!is_connected_circulant(spec) || seen.contains(spec)) continue;
      CirculantClass cls = canonical_class(spec);
      seen.insert(cls.members.begin(), cls.members.end());
      classes.push_back(std::move(cls));
    }
  }
  // Lexicographic scan meets each class at its least member first.
  return classes;
}

CirculantSpec near_one_optimal_spec(int n) {
  if (n < 4) throw InputError("near-one optimal circulant is defined for n >= 4");
  if (n % 2 == 0) return CirculantSpec(n, 1, n / 2 + 1);
  if (n % 3 != 0) return CirculantSpec(n, 1, (2 * mod_inverse(3, n)) % n);
  return CirculantSpec(n, 1, (3 * mod_inverse(2, n)) % n);
}

CirculantSpec near_zero_optimal_spec(int n) {
  if (n < 3) throw InputError("bundled cycle circulant needs n >= 3");
  return CirculantSpec(n, 1, n - 1);
}

}  // namespace scnr
