#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "snark/graph.hpp"
#include "snark/graph_ops.hpp"

namespace snark {

using Permutation = std::vector<Vertex>;  // old label -> new label

struct CanonicalForm {
  Permutation labelling;                // vertex -> canonical label
  std::string encoding;                 // graph6 of the relabelled graph
  std::vector<Permutation> generators;  // automorphism group generators
};

/// Canonical labelling by partition refinement and individualisation,
/// with automorphism pruning. Simple graphs only.
CanonicalForm canonical_form(const CubicGraph& g);
std::string canonical_encoding(const CubicGraph& g);

/// Vertex invariant used to seed the refinement: BFS layer sizes plus
/// edges inside and between layers.
std::vector<uint64_t> vertex_invariants(const CubicGraph& g);

/// Image of an edge under a vertex permutation.
EdgeId map_edge(const CubicGraph& g, const Permutation& p, EdgeId e);

/// Orbits of the group generated by `gens` on 0..count-1, via a caller
/// supplied action. Returns the orbit representative (smallest) per point.
std::vector<int> orbit_representatives(int count, const std::vector<Permutation>& gens,
                                       const std::function<int(const Permutation&, int)>& act);

/// Classes of paths (e1,e2,e3) where two paths are equivalent iff some
/// automorphism maps the central edge of one onto the other and maps its
/// outer edges onto both or neither of the other's outer edges. Each class
/// lists its paths; the first is the representative. Classes are ordered by
/// their representative.
std::vector<std::vector<EdgePath>> doubling_equivalence_classes(const CubicGraph& g);
std::vector<std::vector<EdgePath>> doubling_equivalence_classes(const CubicGraph& g,
                                                                const std::vector<Permutation>& gens);

/// Unordered pairs of opposite edges on 4-cycles, each once.
std::vector<EdgePair> opposite_edge_pairs(const CubicGraph& g);

bool same_pair(const EdgePair& a, const EdgePair& b);

/// The canonically chosen orbit of Aut(g) on E_2(g): pairs in E_2 with the
/// smallest invariant key, then the smallest under canonical labels.
/// Throws if E_2 is empty.
std::vector<EdgePair> canonical_edgepair_orbit(const CubicGraph& g);

/// Same choice function, decided for one pair known to be in E_2. Avoids
/// the canonical labelling whenever the invariant key settles it.
bool in_canonical_orbit(const CubicGraph& g, const EdgePair& pair);

struct ChoiceStats {
  long decided_by_key = 0;
  long needed_labelling = 0;
};
ChoiceStats& choice_stats();

}  // namespace snark
