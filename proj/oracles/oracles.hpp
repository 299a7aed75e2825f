#pragma once

// Slow, independent reference implementations used by the tests, the
// acceptance run and `snarkgen verify`.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "snark/canonical.hpp"
#include "snark/graph.hpp"

namespace snark::oracle {

/// Proper 3-edge-colouring by backtracking over edges. Multigraphs allowed.
bool edge_colourable(const CubicGraph& g);

/// Perfect matchings counted by include/exclude recursion over edges.
long count_perfect_matchings(const CubicGraph& g);

/// All 2-factors, as sorted lists of edge ids, built from perfect matchings.
std::vector<std::vector<EdgeId>> two_factor_edge_sets(const CubicGraph& g);

/// A cyclic cut with fewer than k edges, found by trying every edge subset.
std::optional<std::vector<EdgeId>> brute_force_cyclic_cut(const CubicGraph& g, int k);

/// Every automorphism, by extending vertex maps one vertex at a time.
std::vector<Permutation> all_automorphisms(const CubicGraph& g);

/// Size of the group generated by `gens` (closure; small groups only).
long group_order(const std::vector<Permutation>& gens, int n);

bool isomorphic(const CubicGraph& a, const CubicGraph& b);

/// The smallest graph6 string over all vertex orders (n <= 8 or so).
std::string min_graph6_over_all_orders(const CubicGraph& g);

/// Smallest (S1, S2) over every 2-factor and every legal labelling.
std::vector<int> minimal_representing_string(const CubicGraph& g);

/// Every connected cubic graph on n vertices with girth >= min_girth, one per
/// isomorphism class, optionally filtered before deduplication.
std::vector<CubicGraph> cubic_graphs(int n, int min_girth,
                                     const std::function<bool(const CubicGraph&)>& keep = {});

/// Every cubic graph on n vertices with girth >= 5, one per isomorphism
/// class, optionally filtered before deduplication.
std::vector<CubicGraph> cubic_girth5_graphs(int n,
                                            const std::function<bool(const CubicGraph&)>& keep = {});

/// Snarks with girth >= 5 on n vertices via the naive generator.
std::vector<CubicGraph> naive_proper_snarks(int n);

/// Random labelled copy.
CubicGraph shuffled(const CubicGraph& g, uint64_t seed);

}  // namespace snark::oracle
