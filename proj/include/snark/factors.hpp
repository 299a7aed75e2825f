#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

using FactorType = std::vector<int>;

/// A 2-factor as an ordered list of cycles: odd cycles by ascending length,
/// then even cycles by ascending length; equal lengths by smallest vertex.
/// Each cycle starts at its smallest vertex.
struct TwoFactor {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<EdgeId> matching;  // the complementary edges, ascending ids

  FactorType type() const;
  int odd_count() const;
  bool is_even() const { return odd_count() == 0; }
};

/// Visits every 2-factor of g once. Vertices of degree 2 keep both edges,
/// vertices of degree 3 drop exactly one. With `required` set only factors
/// containing that edge are visited. The visitor returns false to stop;
/// the function returns false iff it was stopped.
bool for_each_2factor(const CubicGraph& g, std::optional<EdgeId> required,
                      const std::function<bool(const TwoFactor&)>& visit);

std::vector<TwoFactor> all_2factors(const CubicGraph& g);

/// Class 2 iff no even 2-factor exists. Requires a complete cubic graph.
bool is_class_two(const CubicGraph& g);

/// Edges whose doubling gives a colourable graph: those joining the two odd
/// cycles of some 2-factor with exactly two odd cycles. Ascending ids.
/// Throws on class 1 input.
std::vector<EdgeId> mark_undoublable_edges(const CubicGraph& g);

struct StrongWitness {
  TwoFactor factor;  // exactly two odd cycles, factor.cycles[0] and [1]
  EdgeId edge = -1;  // joins them
};

/// A 2-factor with two odd cycles and an edge between them, if one exists.
/// Throws on class 1 input.
std::optional<StrongWitness> strong_witness(const CubicGraph& g);
bool is_strong_snark(const CubicGraph& g);
bool witness_is_valid(const CubicGraph& g, const StrongWitness& w);

/// -odd lengths descending, 0, -even lengths descending, 0.
std::vector<int> s1_of_type(const FactorType& type);
std::vector<int> s1_of(const TwoFactor& f);

/// Normalises a length multiset into type order.
FactorType normalise_type(std::vector<int> lengths);

}  // namespace snark
