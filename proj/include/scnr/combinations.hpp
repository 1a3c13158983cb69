#pragma once

#include <cstdint>

#include "scnr/digraph.hpp"

namespace scnr {

/// Calls fn(VertexSet) for every k-subset of {first, ..., n-1} that also
/// contains every vertex of `fixed`. Lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, int first, VertexSet fixed, Fn&& fn) {
  if (k == 0) {
    fn(fixed);
    return;
  }
  for (int v = first; v <= n - k; ++v) {
    VertexSet next = fixed;
    next.insert(v);
    for_each_subset(n, k - 1, v + 1, next, fn);
  }
}

/// Every k-subset of {0, ..., n-1}.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  for_each_subset(n, k, 0, VertexSet(), fn);
}

}  // namespace scnr
