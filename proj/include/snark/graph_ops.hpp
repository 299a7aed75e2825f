#pragma once

#include <limits>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Length of a shortest cycle; a pair of parallel edges counts as a 2-cycle.
/// Returns kInfiniteGirth for forests.
int girth(const CubicGraph& g);

/// A path e1, e2, e3 of edges: e2 shares one endpoint with e1 and the other
/// with e3.
struct EdgePath {
  EdgeId e1 = -1;
  EdgeId e2 = -1;
  EdgeId e3 = -1;
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

struct DoublingResult {
  CubicGraph graph;
  // first = the edge joining the two subdivision vertices, second = e2.
  // Reducing it restores the input graph exactly.
  EdgePair reduction_pair;
};

/// Subdivides e1 (new vertex n) and e3 (new vertex n+1) and joins the two new
/// vertices. Edge ids of the input stay valid in the result.
DoublingResult edge_doubling(const CubicGraph& g, const EdgePath& path);

/// True iff the two edges are vertex-disjoint and lie opposite on a 4-cycle.
bool is_opposite_pair(const CubicGraph& g, EdgeId a, EdgeId b);

/// Inverse of edge_doubling: removes `pair.first` and suppresses its two
/// endpoints. Throws unless the pair lies opposite on a 4-cycle.
CubicGraph reduction(const CubicGraph& g, const EdgePair& pair);

/// G_e: removes e, suppresses the resulting degree-2 vertices, closes label
/// gaps order-preservingly. The result is in multigraph mode when it has
/// parallel edges. Throws if a loop would arise.
CubicGraph edge_reduction(const CubicGraph& g, EdgeId e);

struct InsertionResult {
  CubicGraph graph;
  EdgeId new_edge = -1;
};

/// Subdivides e (new vertex n) and f (new vertex n+1) and joins the new
/// vertices. With e == f the edge is subdivided twice and the two new
/// vertices are joined by a parallel edge.
InsertionResult edge_insertion(const CubicGraph& g, EdgeId e, EdgeId f);

/// Removes the listed vertices (and incident edges), closing label gaps.
CubicGraph remove_vertices(const CubicGraph& g, const std::vector<Vertex>& doomed);

/// All 4-cycles of a simple graph, each reported once.
std::vector<FourCycle> four_cycles(const CubicGraph& g);

/// The two opposite edge pairs of a 4-cycle.
std::array<EdgePair, 2> opposite_pairs(const CubicGraph& g, const FourCycle& c);

/// All paths (e1,e2,e3) with central edge e2, e1 at the lower endpoint of e2.
std::vector<EdgePath> paths_through(const CubicGraph& g, EdgeId e2);

}  // namespace snark
