#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace scnr {

inline constexpr int kMaxVertices = 64;

/// Subset of {0, ..., n-1} stored as a 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  /// Complement relative to {0, ..., n-1}.
  constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & full(n).bits_); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

  /// Members in increasing order.
  std::vector<int> members() const;

 private:
  std::uint64_t bits_ = 0;
};

struct Arc {
  int from = 0;
  int to = 0;
  constexpr auto operator<=>(const Arc&) const = default;
};

/// Simple digraph on vertices 0..n-1: no self-loops, no repeated arcs.
/// Antiparallel pairs (bundles) are allowed. Immutable once built.
class Digraph {
 public:
  /// Throws InputError on self-loops, duplicate arcs, endpoints out of range
  /// or n outside [1, 64].
  Digraph(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  std::size_t size() const { return arcs_.size(); }

  /// Arcs in lexicographic order.
  std::span<const Arc> arcs() const { return arcs_; }

  VertexSet out_neighbours(int v) const { return VertexSet(out_[v]); }
  VertexSet in_neighbours(int v) const { return VertexSet(in_[v]); }
  std::span<const std::uint64_t> out_masks() const { return out_; }
  std::span<const std::uint64_t> in_masks() const { return in_; }

  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1U; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool operator==(const Digraph&) const = default;

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

/// Component index per vertex from one Tarjan pass; components are numbered
/// in the order Tarjan completes them.
std::vector<int> strongly_connected_components(const Digraph& g);

/// True iff g has exactly one strong component (so n = 1 counts).
bool is_strongly_connected(const Digraph& g);

/// Hot-loop form: is the subdigraph induced by `operational` strongly
/// connected? Works directly on the adjacency masks. The empty set is not.
bool induces_strongly_connected(std::span<const std::uint64_t> out,
                                std::span<const std::uint64_t> in,
                                std::uint64_t operational);

inline bool induces_strongly_connected(const Digraph& g, VertexSet operational) {
  return induces_strongly_connected(g.out_masks(), g.in_masks(), operational.bits());
}

/// Subdigraph induced by s, relabelled 0..|s|-1 in increasing original order.
/// Throws InputError if s is empty or mentions vertices >= n.
Digraph induced_subdigraph(const Digraph& g, VertexSet s);

/// Unordered pairs {u, v} with both (u, v) and (v, u) present.
int count_bundles(const Digraph& g);

/// True iff at least two vertices stay operational and one of them has no
/// operational out-neighbour or no operational in-neighbour.
bool has_trivial_failure(const Digraph& g, VertexSet failed);

}  // namespace scnr
