#pragma once

#include <span>

#include "scnr/digraph.hpp"

namespace scnr::families {

/// C_n: arcs i -> i+1 (mod n). n >= 2.
Digraph directed_cycle(int n);

/// S_n: star centred at 0 with every edge a bundle. n >= 2.
Digraph bundled_star(int n);

/// D_n: S_n plus the arc 1 -> 2. n >= 3.
Digraph star_plus_arc(int n);

/// G_k: directed k-cycle on 0..k-1; each of k..n-1 hangs off vertex 0 by a
/// bundle. 3 <= k <= n-1; 2n-k arcs, n-k bundles.
Digraph g_family(int n, int k);

/// H_k (theta digraph). x = 0, y = 1; intermediates 2..n-k+2 each on a path
/// x -> m -> y; vertices n-k+3..n-1 form the return path y -> ... -> x
/// (a single arc y -> x when k = 3). 3 <= k <= n-1; 2n-k arcs.
Digraph h_family(int n, int k);

/// Γ(Z_n, S): arc j -> j+s (mod n) for every j and s in S.
/// Requires n >= 2 and S a nonempty subset of {1, ..., n-1}.
Digraph circulant(int n, std::span<const int> connection_set);

}  // namespace scnr::families
