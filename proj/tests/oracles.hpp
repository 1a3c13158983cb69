#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "scnr/digraph.hpp"

namespace oracle {

/// Transitive closure by Floyd–Warshall on the vertices listed in `alive`.
inline bool strongly_connected(int n, const std::vector<scnr::Arc>& arcs,
                               const std::vector<int>& alive) {
  if (alive.empty()) return false;
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<char> in(n, 0);
  for (int v : alive) {
    in[v] = 1;
    reach[v][v] = 1;
  }
  for (const auto& a : arcs) {
    if (in[a.from] && in[a.to]) reach[a.from][a.to] = 1;
  }
  for (int k : alive) {
    for (int i : alive) {
      if (!reach[i][k]) continue;
      for (int j : alive) {
        if (reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  for (int i : alive) {
    for (int j : alive) {
      if (!reach[i][j]) return false;
    }
  }
  return true;
}

inline bool strongly_connected(const scnr::Digraph& g) {
  std::vector<scnr::Arc> arcs(g.arcs().begin(), g.arcs().end());
  std::vector<int> all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  return strongly_connected(g.order(), arcs, all);
}

/// F-vector by enumerating every failure set and running the closure oracle.
inline std::vector<mpz_class> f_vector(const scnr::Digraph& g) {
  const int n = g.order();
  std::vector<scnr::Arc> arcs(g.arcs().begin(), g.arcs().end());
  std::vector<mpz_class> f(n + 1, 0);
  for (std::uint64_t failed = 0; failed < (std::uint64_t{1} << n); ++failed) {
    std::vector<int> alive;
    for (int v = 0; v < n; ++v) {
      if (!((failed >> v) & 1U)) alive.push_back(v);
    }
    if (strongly_connected(n, arcs, alive)) f[n - alive.size()] += 1;
  }
  return f;
}

/// Bundles by scanning every unordered pair.
inline int bundles(const scnr::Digraph& g) {
  int b = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_arc(u, v) && g.has_arc(v, u)) ++b;
    }
  }
  return b;
}

/// Random simple digraph: each ordered pair present with probability `density`.
inline scnr::Digraph random_digraph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<scnr::Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && keep(rng)) arcs.push_back({u, v});
    }
  }
  return scnr::Digraph(n, std::move(arcs));
}

/// Random strongly connected digraph: a random Hamiltonian cycle plus extra arcs.
inline scnr::Digraph random_strong_digraph(std::mt19937_64& rng, int n, double density) {
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  if (n >= 2) {
    for (int i = 0; i < n; ++i) present[perm[i]][perm[(i + 1) % n]] = 1;
  }
  std::bernoulli_distribution keep(density);
  std::vector<scnr::Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && (present[u][v] || keep(rng))) arcs.push_back({u, v});
    }
  }
  return scnr::Digraph(n, std::move(arcs));
}

}  // namespace oracle
