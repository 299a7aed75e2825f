#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snark/factors.hpp"
#include "snark/graph.hpp"

namespace snark {

struct StrongVerdict {
  bool strong = false;
  std::optional<StrongWitness> witness;  // set iff not strong
};

struct StrongFilterResult {
  std::vector<CubicGraph> strong;
  std::vector<StrongVerdict> verdicts;  // one per input, in order
};

/// Splits snarks into strong ones and rejects with witnesses. Throws on a
/// class 1 input.
StrongFilterResult filter_strong(const std::vector<CubicGraph>& snarks);

/// Human readable witness: the two odd cycles and the joining edge.
std::string describe_witness(const CubicGraph& g, const StrongWitness& w);

/// Every edge insertion (each unordered pair of distinct edges plus the
/// same-edge variant) into every parent; keeps simple, cyclically
/// 4-connected, class 2, strong results, one per isomorphism class.
std::vector<CubicGraph> generate_strong_by_insertion(const std::vector<CubicGraph>& parents);

/// Every reduction of a 4-cycle edge pair that stays cyclically
/// 4-connected, as graphs.
std::vector<CubicGraph> valid_reductions(const CubicGraph& g);

}  // namespace snark
