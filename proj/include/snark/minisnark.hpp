#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "snark/factors.hpp"
#include "snark/graph.hpp"
#include "snark/repstring.hpp"

namespace snark {

/// Cycle-length types with at least two odd cycles, all lengths >= g, sum n.
/// Ordered by S1 ascending. With `strong`, types with exactly two cycles are
/// left out.
std::vector<FactorType> enumerate_types(int n, int g, bool strong = false);

struct InitialGraph {
  CubicGraph graph;  // 2-regular, cycles labelled consecutively in type order
  TwoFactor factor;
  LegalLabelling labelling;
};
InitialGraph initial_graph(const FactorType& type);

struct MinisnarkOptions {
  int n = 10;
  int girth = 5;
  bool strong = false;
  int mod = 1;
  int res = 0;
  int split_depth = 6;  // nodes at this depth are dealt out by res/mod
  bool speedup_a = true;   // skip prefix checks for the last edges
  bool speedup_b = true;   // resume cached labellings instead of recomputing
  bool final_class_check = true;
  int threads = 1;
  std::vector<FactorType> only_types;  // empty: all types
};

struct Emission {
  CubicGraph graph;  // labelled by its canonical string
  FactorType type;   // type of the canonical 2-factor
};

struct MinisnarkStats {
  long nodes = 0;
  long emitted = 0;
  long rejected_even = 0;
  long rejected_s1 = 0;
  long rejected_prefix = 0;
  long rejected_final = 0;
  long rejected_strong = 0;
  std::map<FactorType, long> per_type;
};

/// Orderly generation of cubic class 2 graphs with girth >= g that are
/// cyclically 4-connected. Emissions come in a deterministic order.
MinisnarkStats run_minisnark(const MinisnarkOptions& opt,
                             const std::function<void(const Emission&)>& sink);

std::vector<Emission> generate_proper(const MinisnarkOptions& opt, MinisnarkStats* stats = nullptr);

}  // namespace snark
