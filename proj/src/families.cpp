#include "scnr/families.hpp"

#include <set>
#include <string>

#include "scnr/error.hpp"

namespace scnr::families {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

void add_bundle(std::vector<Arc>& arcs, int u, int v) {
  arcs.push_back({u, v});
  arcs.push_back({v, u});
}

}  // namespace

Digraph directed_cycle(int n) {
  require(n >= 2 && n <= kMaxVertices, "directed cycle needs 2 <= n <= 64");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, std::move(arcs));
}

Digraph bundled_star(int n) {
  require(n >= 2 && n <= kMaxVertices, "bundled star needs 2 <= n <= 64");
  std::vector<Arc> arcs;
  for (int i = 1; i < n; ++i) add_bundle(arcs, 0, i);
  return Digraph(n, std::move(arcs));
}

Digraph star_plus_arc(int n) {
  require(n >= 3 && n <= kMaxVertices, "star plus arc needs 3 <= n <= 64");
  std::vector<Arc> arcs;
  for (int i = 1; i < n; ++i) add_bundle(arcs, 0, i);
  arcs.push_back({1, 2});
  return Digraph(n, std::move(arcs));
}

Digraph g_family(int n, int k) {
  require(n <= kMaxVertices && k >= 3 && k <= n - 1,
          "G_k needs 3 <= k <= n-1 (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) arcs.push_back({i, (i + 1) % k});
  for (int v = k; v < n; ++v) add_bundle(arcs, 0, v);
  return Digraph(n, std::move(arcs));
}

Digraph h_family(int n, int k) {
  require(n <= kMaxVertices && k >= 3 && k <= n - 1,
          "H_k needs 3 <= k <= n-1 (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  constexpr int x = 0;
  constexpr int y = 1;
  std::vector<Arc> arcs;
  const int last_middle = n - k + 2;
  for (int m = 2; m <= last_middle; ++m) {
    arcs.push_back({x, m});
    arcs.push_back({m, y});
  }
  int previous = y;
  for (int v = last_middle + 1; v < n; ++v) {
    arcs.push_back({previous, v});
    previous = v;
  }
  arcs.push_back({previous, x});
  return Digraph(n, std::move(arcs));
}

Digraph circulant(int n, std::span<const int> connection_set) {
  require(n >= 2 && n <= kMaxVertices, "circulant needs 2 <= n <= 64");
  require(!connection_set.empty(), "circulant connection set is empty");
  std::set<int> steps;
  for (int s : connection_set) {
    require(s >= 1 && s < n, "connection set element " + std::to_string(s) +
                                 " outside 1.." + std::to_string(n - 1));
    require(steps.insert(s).second, "connection set repeats " + std::to_string(s));
  }
  std::vector<Arc> arcs;
  for (int j = 0; j < n; ++j) {
    for (int s : steps) arcs.push_back({j, (j + s) % n});
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace scnr::families
