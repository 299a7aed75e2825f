#pragma once

#include <functional>
#include <string>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

struct TetrationStats {
  long parents = 0;
  long classes = 0;
  long doubled = 0;   // children built (unmarked centre, one per class)
  long accepted = 0;
};

/// All girth-4 snarks on n+2 vertices from the complete, isomorph-free list
/// of snarks on n vertices. Each parent doubles one path per equivalence
/// class whose centre is unmarked; a child is kept iff the reduction that
/// undoes the doubling is in its canonically chosen orbit.
/// Throws if a parent is not a snark.
TetrationStats generate_g4_level(const std::vector<CubicGraph>& parents,
                                 const std::function<void(const CubicGraph&)>& sink, int threads = 1);

std::vector<CubicGraph> generate_g4(const std::vector<CubicGraph>& parents, TetrationStats* stats = nullptr,
                                    int threads = 1);

/// Canonical encodings of every class-2, cyclically 4-connected result of
/// every doubling of every parent, deduplicated and sorted.
std::vector<std::string> naive_g4_encodings(const std::vector<CubicGraph>& parents);

/// True iff the output has pairwise non-isomorphic members and matches the
/// naive all-doublings set exactly.
bool verify_level_isomorph_free(const std::vector<CubicGraph>& output,
                                const std::vector<CubicGraph>& parents);

}  // namespace snark
