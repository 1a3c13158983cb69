#include "scnr/digraph.hpp"

#include <algorithm>
#include <string>

#include "scnr/error.hpp"

namespace scnr {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 1 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxVertices) + "]");
  }
  out_.assign(n, 0);
  in_.assign(n, 0);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto [u, v] = arcs_[i];
    const std::string where = "arc #" + std::to_string(i) + " [" + std::to_string(u) + "," +
                              std::to_string(v) + "]";
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError(where + " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InputError(where + " is a self-loop");
    if (has_arc(u, v)) throw InputError(where + " duplicates an earlier arc");
    out_[u] |= std::uint64_t{1} << v;
    in_[v] |= std::uint64_t{1} << u;
  }
  std::sort(arcs_.begin(), arcs_.end());
}

std::vector<int> strongly_connected_components(const Digraph& g) {
  // Iterative Tarjan over the sorted arc list.
  const int n = g.order();
  std::vector<std::vector<int>> adj(n);
  for (const Arc& a : g.arcs()) adj[a.from].push_back(a.to);

  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;  // (vertex, next child)
  int counter = 0;
  int components = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return comp;
}

bool is_strongly_connected(const Digraph& g) {
  const auto comp = strongly_connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

namespace {

std::uint64_t reach_within(std::span<const std::uint64_t> adj, std::uint64_t mask,
                           std::uint64_t start) {
  std::uint64_t reached = start;
  std::uint64_t frontier = start;
  while (frontier != 0) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint64_t fresh = adj[v] & mask & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached;
}

}  // namespace

bool induces_strongly_connected(std::span<const std::uint64_t> out,
                                std::span<const std::uint64_t> in,
                                std::uint64_t operational) {
  if (operational == 0) return false;
  const std::uint64_t start = operational & (~operational + 1);
  if (reach_within(out, operational, start) != operational) return false;
  return reach_within(in, operational, start) == operational;
}

Digraph induced_subdigraph(const Digraph& g, VertexSet s) {
  if (s.empty()) throw InputError("induced subdigraph of the empty vertex set");
  if ((s.bits() & ~g.vertices().bits()) != 0) {
    throw InputError("vertex set mentions vertex " +
                     std::to_string(VertexSet(s.bits() & ~g.vertices().bits()).lowest()) +
                     " but the digraph has " + std::to_string(g.order()) + " vertices");
  }
  std::vector<int> relabel(g.order(), -1);
  int next = 0;
  for (int v : s.members()) relabel[v] = next++;
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (s.contains(a.from) && s.contains(a.to)) arcs.push_back({relabel[a.from], relabel[a.to]});
  }
  return Digraph(next, std::move(arcs));
}

int count_bundles(const Digraph& g) {
  int bundles = 0;
  for (const Arc& a : g.arcs()) {
    if (a.from < a.to && g.has_arc(a.to, a.from)) ++bundles;
  }
  return bundles;
}

bool has_trivial_failure(const Digraph& g, VertexSet failed) {
  const std::uint64_t alive = failed.complement(g.order()).bits();
  if (std::popcount(alive) < 2) return false;
  for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((g.out_masks()[v] & alive) == 0 || (g.in_masks()[v] & alive) == 0) return true;
  }
  return false;
}

}  // namespace scnr
