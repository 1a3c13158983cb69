#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "scnr/digraph.hpp"

namespace scnr {

/// Two-element connection set {a, b} of Γ(Z_n, {a, b}), stored sorted.
class CirculantSpec {
 public:
  /// Sorts the pair; throws InputError unless n >= 3, a != b and both lie in 1..n-1.
  CirculantSpec(int n, int a, int b);

  int order() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }

  Digraph to_digraph() const;
  std::string label() const;  // "{a,b}"

  auto operator<=>(const CirculantSpec&) const = default;

 private:
  int n_;
  int a_;
  int b_;
};

/// Orbit of a spec under multiplication by the units of Z_n.
struct CirculantClass {
  CirculantSpec canonical;               // lexicographically least member
  std::vector<CirculantSpec> members;    // sorted, includes canonical
};

/// y in (0, n) with x*y = 1 (mod n). Throws InputError if gcd(x, n) != 1.
int mod_inverse(int x, int n);

/// gcd(n, a, b) == 1.
bool is_connected_circulant(const CirculantSpec& spec);

/// Smallest unit u with u*{a1,b1} = {a2,b2} (mod n), if any.
/// Throws InputError when the orders differ.
std::optional<int> adam_multiplier(const CirculantSpec& s1, const CirculantSpec& s2);

inline bool adam_equivalent(const CirculantSpec& s1, const CirculantSpec& s2) {
  return adam_multiplier(s1, s2).has_value();
}

CirculantClass canonical_class(const CirculantSpec& spec);

/// Every connected class of order n, ordered by canonical spec. n >= 3.
std::vector<CirculantClass> enumerate_circulants(int n);

/// {1, n/2+1} for even n; {1, 2·3^-1} for odd n with 3 ∤ n; {1, 3·2^-1} for
/// odd n with 3 | n. n >= 4.
CirculantSpec near_one_optimal_spec(int n);

/// The bundled cycle {1, n-1}. n >= 3.
CirculantSpec near_zero_optimal_spec(int n);

}  // namespace scnr
