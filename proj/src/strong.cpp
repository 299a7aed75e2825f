#include "snark/strong.hpp"

#include <set>
#include <sstream>

#include "snark/canonical.hpp"
#include "snark/connectivity.hpp"
#include "snark/graph_ops.hpp"

namespace snark {

StrongFilterResult filter_strong(const std::vector<CubicGraph>& snarks) {
  StrongFilterResult out;
  for (const auto& g : snarks) {
    StrongVerdict v;
    v.witness = strong_witness(g);
    v.strong = !v.witness.has_value();
    if (v.strong) out.strong.push_back(g);
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

std::string describe_witness(const CubicGraph& g, const StrongWitness& w) {
  std::ostringstream os;
  for (int c = 0; c < 2; ++c) {
    os << "cycle" << c + 1 << ":";
    for (size_t i = 0; i < w.factor.cycles[c].size(); ++i) os << (i ? "," : "") << w.factor.cycles[c][i];
    os << " ";
  }
  os << "edge:" << g.edge(w.edge).low() << "-" << g.edge(w.edge).high();
  return os.str();
}

std::vector<CubicGraph> generate_strong_by_insertion(const std::vector<CubicGraph>& parents) {
  std::set<std::string> seen;
  std::vector<CubicGraph> out;
  for (const auto& p : parents) {
    for (EdgeId e = 0; e < p.size(); ++e) {
      for (EdgeId f = e; f < p.size(); ++f) {
        const CubicGraph g = edge_insertion(p, e, f).graph;
        if (!g.is_simple()) continue;
        if (!is_class_two(g)) continue;
        if (!is_cyclically_k_connected(g, 4)) continue;
        if (!is_strong_snark(g)) continue;
        if (seen.insert(canonical_encoding(g)).second) out.push_back(g);
      }
    }
  }
  return out;
}

std::vector<CubicGraph> valid_reductions(const CubicGraph& g) {
  std::vector<CubicGraph> out;
  for (const EdgePair& p : opposite_edge_pairs(g))
    if (reduction_keeps_cyclic4(g, p)) out.push_back(reduction(g, p));
  return out;
}

}  // namespace snark
