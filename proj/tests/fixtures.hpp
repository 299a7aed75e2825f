#pragma once

#include <cstdlib>
#include <map>
#include <vector>

#include "snark/factors.hpp"
#include "snark/graph.hpp"
#include "snark/minisnark.hpp"
#include "snark/repstring.hpp"

namespace fixtures {

using namespace snark;

inline CubicGraph petersen() {
  CubicGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline CubicGraph k4() { return CubicGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline CubicGraph k33() {
  CubicGraph g(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) g.add_edge(a, b);
  return g;
}

inline CubicGraph cube() {
  CubicGraph g(8);
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) g.add_edge(v, v ^ bit);
  return g;
}

// Graph given by a factor type (cycles on consecutive labels) and the S2
// string with 1-based labels.
inline CubicGraph from_string(const FactorType& type, const std::vector<int>& s2) {
  int n = 0;
  for (int l : type) n += l;
  CubicGraph g(n);
  int at = 0;
  for (int l : type) {
    for (int i = 0; i < l; ++i) g.add_edge(at + i, at + (i + 1) % l);
    at += l;
  }
  for (int i = 0; i < n; ++i)
    if (s2[i] - 1 > i) g.add_edge(i, s2[i] - 1);
  return g;
}

// The 2-factor made of the consecutive-label cycles, with the labelling
// that gives every vertex its own index as label.
struct Labelled {
  TwoFactor factor;
  LegalLabelling labelling;
};

inline Labelled identity_labelling(const CubicGraph& g, const FactorType& type) {
  std::vector<int> block_of(g.order());
  int at = 0, b = 0;
  for (int l : type) {
    for (int i = 0; i < l; ++i) block_of[at + i] = b;
    at += l;
    ++b;
  }
  for (const auto& f : all_2factors(g)) {
    // Every cycle must run along consecutive labels of one block.
    bool match = true;
    for (const auto& c : f.cycles) {
      const int len = static_cast<int>(c.size());
      match &= len == type[block_of[c[0]]];
      for (int i = 0; i < len && match; ++i) {
        const int d = std::abs(c[i] - c[(i + 1) % len]);
        match &= block_of[c[i]] == block_of[c[0]] && (d == 1 || d == len - 1);
      }
    }
    if (!match) continue;
    std::vector<int> order(f.cycles.size()), start(f.cycles.size(), 0), dir(f.cycles.size());
    for (size_t c = 0; c < f.cycles.size(); ++c) {
      order[block_of[f.cycles[c][0]]] = static_cast<int>(c);
      dir[c] = f.cycles[c][1] == f.cycles[c][0] + 1 ? 1 : -1;
    }
    return {f, make_labelling(f, order, start, dir)};
  }
  throw GraphError("no such factor");
}

// Blanusa snark: a string for type (5,5,8) and the canonical one for
// type (5,13), 1-based.
inline const std::vector<int> kBlanusaAlt = {6, 8, 10, 11, 13, 1, 15, 2, 17, 3, 4, 16, 5, 18, 7, 12, 9, 14};
inline const std::vector<int> kBlanusaCanonical = {6, 8, 10, 7, 13, 1, 4, 2, 16, 3, 15, 17, 5, 18, 11, 9, 12, 14};

// Proper snarks for small n, computed once per process.
inline const std::vector<CubicGraph>& proper(int n) {
  static std::map<int, std::vector<CubicGraph>> memo;
  auto it = memo.find(n);
  if (it == memo.end()) {
    MinisnarkOptions o;
    o.n = n;
    std::vector<CubicGraph> out;
    for (auto& e : generate_proper(o)) out.push_back(e.graph);
    it = memo.emplace(n, std::move(out)).first;
  }
  return it->second;
}

}  // namespace fixtures
