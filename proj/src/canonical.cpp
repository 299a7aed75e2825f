#include "snark/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

#include "snark/connectivity.hpp"
#include "snark/graph6.hpp"

namespace snark {

namespace {

uint64_t mix(uint64_t h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

class LabelSearch {
 public:
  explicit LabelSearch(const CubicGraph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    std::vector<int> colour(n_, 0);
    const auto inv = vertex_invariants(g_);
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
    for (int i = 0; i < n_; ++i)
      colour[order[i]] = (i > 0 && inv[order[i]] == inv[order[i - 1]]) ? colour[order[i - 1]] : i;
    std::vector<Vertex> path;
    search(colour, path);
    CanonicalForm out;
    out.labelling = best_lab_;
    out.generators = std::move(gens_);
    out.encoding = n_ == 0 ? std::string(1, char(63)) : to_graph6(g_.relabelled(best_lab_));
    return out;
  }

 private:
  static constexpr int kNoJump = 1 << 30;

  void refine(std::vector<int>& colour) const {
    std::vector<std::array<int, 4>> key(n_);
    std::vector<int> order(n_);
    int cells = -1;
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        std::array<int, 3> nb{-1, -1, -1};
        for (int i = 0; i < g_.degree(v); ++i) nb[i] = colour[g_.neighbour(v, i)];
        std::sort(nb.begin(), nb.end());
        key[v] = {colour[v], nb[0], nb[1], nb[2]};
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
      int count = 0;
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || key[order[i]] != key[order[i - 1]]) {
          colour[order[i]] = i;
          ++count;
        } else {
          colour[order[i]] = colour[order[i - 1]];
        }
      }
      if (count == cells) return;
      cells = count;
    }
  }

  std::vector<uint64_t> code_of(const std::vector<int>& lab) const {
    std::vector<uint64_t> code(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      uint64_t row = 0;
      for (int i = 0; i < g_.degree(v); ++i) row |= uint64_t{1} << lab[g_.neighbour(v, i)];
      code[lab[v]] = row;
    }
    return code;
  }

  void add_automorphism(const std::vector<int>& ref_lab, const std::vector<int>& lab) {
    std::vector<Vertex> inv(n_);
    for (Vertex v = 0; v < n_; ++v) inv[ref_lab[v]] = v;
    Permutation p(n_);
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) {
      p[v] = inv[lab[v]];
      identity &= p[v] == v;
    }
    if (!identity) gens_.push_back(std::move(p));
  }

  static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    int i = 0;
    while (i < static_cast<int>(a.size()) && i < static_cast<int>(b.size()) && a[i] == b[i]) ++i;
    return i;
  }

  int leaf(const std::vector<int>& lab, const std::vector<Vertex>& path) {
    auto code = code_of(lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_code_ = best_code_ = code;
      first_path_ = best_path_ = path;
      return kNoJump;
    }
    if (code == first_code_) {
      add_automorphism(first_lab_, lab);
      return common_prefix(path, first_path_);
    }
    if (code == best_code_) {
      add_automorphism(best_lab_, lab);
      return common_prefix(path, best_path_);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = lab;
      best_path_ = path;
    }
    return kNoJump;
  }

  // Returns the level to jump back to, or kNoJump.
  int search(std::vector<int> colour, std::vector<Vertex>& path) {
    refine(colour);
    std::vector<int> size(n_, 0);
    for (Vertex v = 0; v < n_; ++v) ++size[colour[v]];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) return leaf(colour, path);

    std::vector<Vertex> members;
    for (Vertex v = 0; v < n_; ++v)
      if (colour[v] == target) members.push_back(v);
    const int level = static_cast<int>(path.size());
    std::vector<Vertex> tried;
    for (Vertex w : members) {
      if (!tried.empty() && equivalent_to_tried(w, tried, path)) continue;
      tried.push_back(w);
      std::vector<int> child = colour;
      for (Vertex x : members)
        if (x != w) child[x] = target + 1;
      path.push_back(w);
      const int jump = search(std::move(child), path);
      path.pop_back();
      if (jump < level) return jump;
    }
    return kNoJump;
  }

  // True iff w shares an orbit with a tried vertex under the generators
  // that fix the current path pointwise.
  bool equivalent_to_tried(Vertex w, const std::vector<Vertex>& tried,
                           const std::vector<Vertex>& path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& p : gens_) {
      if (!std::all_of(path.begin(), path.end(), [&](Vertex v) { return p[v] == v; })) continue;
      any = true;
      for (Vertex v = 0; v < n_; ++v) parent[find(v)] = find(p[v]);
    }
    if (!any) return false;
    const int rw = find(w);
    return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return find(t) == rw; });
  }

  const CubicGraph& g_;
  const int n_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<uint64_t> first_code_, best_code_;
  std::vector<Vertex> first_path_, best_path_;
  std::vector<Permutation> gens_;
};

}  // namespace

std::vector<uint64_t> vertex_invariants(const CubicGraph& g) {
  const int n = g.order();
  std::vector<uint64_t> out(n);
  std::vector<int> dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    int head = 0, tail = 0;
    queue[tail++] = r;
    while (head < tail) {
      const Vertex x = queue[head++];
      for (int i = 0; i < g.degree(x); ++i) {
        const Vertex y = g.neighbour(x, i);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue[tail++] = y;
        }
      }
    }
    // Per layer: size, edges inside the layer, edges to the next layer.
    std::vector<std::array<int, 3>> layer;
    for (int i = 0; i < tail; ++i) {
      const int d = dist[queue[i]];
      if (static_cast<int>(layer.size()) <= d) layer.resize(d + 1, {0, 0, 0});
      ++layer[d][0];
    }
    for (const Edge& e : g.edges()) {
      const int a = dist[e.u], b = dist[e.v];
      if (a < 0) continue;
      if (a == b) ++layer[a][1];
      else ++layer[std::min(a, b)][2];
    }
    uint64_t h = 0x51ed27;
    for (const auto& l : layer) h = mix(mix(mix(h, l[0]), l[1]), l[2]);
    out[r] = h;
  }
  return out;
}

CanonicalForm canonical_form(const CubicGraph& g) {
  if (!g.is_simple()) throw GraphError("canonical_form needs a simple graph");
  if (g.order() > kMaxVertices) throw GraphError("canonical_form: graph too large");
  return LabelSearch(g).run();
}

std::string canonical_encoding(const CubicGraph& g) { return canonical_form(g).encoding; }

EdgeId map_edge(const CubicGraph& g, const Permutation& p, EdgeId e) {
  const Edge& ed = g.edge(e);
  const auto image = g.find_edge(p[ed.u], p[ed.v]);
  if (!image) throw GraphError("map_edge: permutation is not an automorphism");
  return *image;
}

std::vector<int> orbit_representatives(int count, const std::vector<Permutation>& gens,
                                       const std::function<int(const Permutation&, int)>& act) {
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : gens)
    for (int i = 0; i < count; ++i) {
      const int a = find(i), b = find(act(p, i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> rep(count);
  for (int i = 0; i < count; ++i) rep[i] = find(i);
  return rep;
}

namespace {

// The two outer edges at each end of e, ascending ids.
struct Outer {
  std::array<EdgeId, 2> a;  // at e.low()
  std::array<EdgeId, 2> c;  // at e.high()
};

Outer outer_edges(const CubicGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  Outer out{};
  int ia = 0, ic = 0;
  for (int i = 0; i < 3; ++i) {
    const EdgeId x = g.incidences(ed.low())[i].edge;
    if (x != e) out.a[ia++] = x;
    const EdgeId y = g.incidences(ed.high())[i].edge;
    if (y != e) out.c[ic++] = y;
  }
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.c.begin(), out.c.end());
  return out;
}

// Object 2e+t: t = 0 pairs a0-c0 / a1-c1, t = 1 pairs a0-c1 / a1-c0.
int object_of(const CubicGraph& g, EdgeId e, EdgeId x, EdgeId y) {
  const Outer o = outer_edges(g, e);
  EdgeId a = x, c = y;
  if (a != o.a[0] && a != o.a[1]) std::swap(a, c);
  const int ia = a == o.a[1];
  const int ic = c == o.c[1];
  return 2 * e + (ia != ic);
}

}  // namespace

std::vector<std::vector<EdgePath>> doubling_equivalence_classes(const CubicGraph& g) {
  return doubling_equivalence_classes(g, canonical_form(g).generators);
}

std::vector<std::vector<EdgePath>> doubling_equivalence_classes(const CubicGraph& g,
                                                                const std::vector<Permutation>& gens) {
  if (!g.is_complete() || !g.is_simple())
    throw GraphError("doubling classes need a simple complete cubic graph");
  const int m = g.size();
  std::vector<Outer> outer(m);
  for (EdgeId e = 0; e < m; ++e) outer[e] = outer_edges(g, e);
  const auto rep = orbit_representatives(2 * m, gens, [&](const Permutation& p, int obj) {
    const EdgeId e = obj / 2;
    const int t = obj % 2;
    const EdgeId x = outer[e].a[0], y = outer[e].c[t];
    return object_of(g, map_edge(g, p, e), map_edge(g, p, x), map_edge(g, p, y));
  });
  std::vector<std::vector<EdgePath>> classes;
  std::vector<int> slot(2 * m, -1);
  for (int obj = 0; obj < 2 * m; ++obj) {
    const int r = rep[obj];
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    const EdgeId e = obj / 2;
    const int t = obj % 2;
    const Outer& o = outer[e];
    classes[slot[r]].push_back(EdgePath{o.a[0], e, o.c[t]});
    classes[slot[r]].push_back(EdgePath{o.a[1], e, o.c[1 - t]});
  }
  return classes;
}

std::vector<EdgePair> opposite_edge_pairs(const CubicGraph& g) {
  std::vector<EdgePair> out;
  for (const FourCycle& c : four_cycles(g)) {
    for (EdgePair p : opposite_pairs(g, c)) {
      if (p.first > p.second) std::swap(p.first, p.second);
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const EdgePair& a, const EdgePair& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool same_pair(const EdgePair& a, const EdgePair& b) {
  return (a.first == b.first && a.second == b.second) ||
         (a.first == b.second && a.second == b.first);
}

ChoiceStats& choice_stats() {
  thread_local ChoiceStats stats;
  return stats;
}

namespace {

// Isomorphism-invariant key of an opposite pair; smaller is preferred.
class PairKeys {
 public:
  explicit PairKeys(const CubicGraph& g) : g_(g), inv_(vertex_invariants(g)), c4_(g.size(), 0) {
    for (const FourCycle& c : four_cycles(g))
      for (const EdgePair& p : opposite_pairs(g, c)) {
        ++c4_[p.first];
        ++c4_[p.second];
      }
  }

  uint64_t edge_key(EdgeId e) const {
    const Edge& ed = g_.edge(e);
    const uint64_t a = inv_[ed.u], b = inv_[ed.v];
    return mix(mix(mix(0x2545f491, c4_[e]), std::min(a, b)), std::max(a, b));
  }

  uint64_t key(const EdgePair& p) const {
    const uint64_t a = edge_key(p.first), b = edge_key(p.second);
    return mix(mix(0x9d2c5680, std::min(a, b)), std::max(a, b));
  }

 private:
  const CubicGraph& g_;
  std::vector<uint64_t> inv_;
  std::vector<int> c4_;
};

using PairLabel = std::array<int, 4>;

PairLabel pair_label(const CubicGraph& g, const Permutation& lab, const EdgePair& p) {
  auto edge_label = [&](EdgeId e) {
    const int a = lab[g.edge(e).u], b = lab[g.edge(e).v];
    return std::array<int, 2>{std::min(a, b), std::max(a, b)};
  };
  auto x = edge_label(p.first), y = edge_label(p.second);
  if (y < x) std::swap(x, y);
  return {x[0], x[1], y[0], y[1]};
}

std::vector<EdgePair> orbit_of(const CubicGraph& g, const std::vector<Permutation>& gens,
                               const EdgePair& start) {
  std::vector<EdgePair> orbit{start};
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& p : gens) {
      const EdgePair image{map_edge(g, p, orbit[i].first), map_edge(g, p, orbit[i].second)};
      if (std::none_of(orbit.begin(), orbit.end(), [&](const EdgePair& q) { return same_pair(q, image); }))
        orbit.push_back(image);
    }
  }
  return orbit;
}

// Among `tied` (all in E_2, equal key) the orbit of the one with the
// smallest canonical label.
std::vector<EdgePair> break_tie(const CubicGraph& g, const std::vector<EdgePair>& tied) {
  const CanonicalForm cf = canonical_form(g);
  const EdgePair* best = nullptr;
  PairLabel best_label{};
  for (const EdgePair& p : tied) {
    const PairLabel l = pair_label(g, cf.labelling, p);
    if (!best || l < best_label) {
      best = &p;
      best_label = l;
    }
  }
  return orbit_of(g, cf.generators, *best);
}

}  // namespace

std::vector<EdgePair> canonical_edgepair_orbit(const CubicGraph& g) {
  const auto pairs = opposite_edge_pairs(g);
  const PairKeys keys(g);
  std::optional<uint64_t> best;
  std::vector<EdgePair> tied;
  for (const EdgePair& p : pairs) {
    if (!reduction_keeps_cyclic4(g, p)) continue;
    const uint64_t k = keys.key(p);
    if (!best || k < *best) {
      best = k;
      tied.clear();
    }
    if (k == *best) tied.push_back(p);
  }
  if (tied.empty()) throw GraphError("canonical_edgepair_orbit: no reducible pair");
  if (tied.size() == 1) return tied;
  return break_tie(g, tied);
}

bool in_canonical_orbit(const CubicGraph& g, const EdgePair& pair) {
  const auto pairs = opposite_edge_pairs(g);
  const PairKeys keys(g);
  const uint64_t own = keys.key(pair);
  // Cheapest rejections first: a smaller key reducible pair beats us.
  std::vector<std::pair<uint64_t, EdgePair>> smaller;
  std::vector<EdgePair> tied{pair};
  std::vector<EdgePair> tied_unchecked;
  for (const EdgePair& p : pairs) {
    if (same_pair(p, pair)) continue;
    const uint64_t k = keys.key(p);
    if (k < own) smaller.emplace_back(k, p);
    else if (k == own) tied_unchecked.push_back(p);
  }
  std::sort(smaller.begin(), smaller.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [k, p] : smaller)
    if (reduction_keeps_cyclic4(g, p)) {
      ++choice_stats().decided_by_key;
      return false;
    }
  for (const EdgePair& p : tied_unchecked)
    if (reduction_keeps_cyclic4(g, p)) tied.push_back(p);
  if (tied.size() == 1) {
    ++choice_stats().decided_by_key;
    return true;
  }
  ++choice_stats().needed_labelling;
  const auto orbit = break_tie(g, tied);
  return std::any_of(orbit.begin(), orbit.end(), [&](const EdgePair& q) { return same_pair(q, pair); });
}

}  // namespace snark
