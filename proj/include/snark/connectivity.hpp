#pragma once

#include <optional>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

/// An edge cut whose removal leaves at least two components containing a
/// cycle. `side` holds the vertices of one such component's shore.
struct CyclicCut {
  std::vector<EdgeId> edges;
  std::vector<Vertex> side;
  std::vector<Vertex> other_side;
};

/// Finds a cyclic edge cut with fewer than k edges, if one exists.
/// Requires a complete cubic graph; parallel edges are allowed.
std::optional<CyclicCut> find_small_cyclic_cut(const CubicGraph& g, int k);

/// True iff g has no cyclic edge cut with fewer than k edges (k in {4, 5}
/// in practice; any k >= 2 works).
bool is_cyclically_k_connected(const CubicGraph& g, int k);

/// Membership of `pair` in E_2(g): the reduction stays cyclically
/// 4-connected. Parallel edges in the reduced graph count as failure.
bool reduction_keeps_cyclic4(const CubicGraph& g, const EdgePair& pair);

}  // namespace snark
