#include "snark/connectivity.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "snark/graph_ops.hpp"

namespace snark {

namespace {

// Whether the subgraph induced by `in_set` contains a cycle.
bool induces_cycle(const CubicGraph& g, const std::vector<char>& in_set) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (!in_set[e.u] || !in_set[e.v]) continue;
    const int a = find(e.u), b = find(e.v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

CyclicCut make_cut(const CubicGraph& g, const std::vector<char>& side) {
  CyclicCut cut;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (side[g.edge(e).u] != side[g.edge(e).v]) cut.edges.push_back(e);
  for (Vertex v = 0; v < g.order(); ++v) (side[v] ? cut.side : cut.other_side).push_back(v);
  return cut;
}

bool is_cyclic(const CubicGraph& g, const std::vector<char>& side) {
  std::vector<char> rest(side.size());
  for (size_t i = 0; i < side.size(); ++i) rest[i] = !side[i];
  return induces_cycle(g, side) && induces_cycle(g, rest);
}

// Unit-capacity max-flow between two vertex sets, stopped once `limit`
// augmenting paths exist. On return `reach` marks the source side of a
// minimum cut when the flow is below the limit.
class FlowSolver {
 public:
  explicit FlowSolver(const CubicGraph& g)
      : g_(g), flow_(g.size()), reach_(g.order()), via_(g.order()), queue_(g.order()) {}

  int max_flow(const std::vector<Vertex>& sources, const std::vector<Vertex>& sinks, int limit) {
    std::fill(flow_.begin(), flow_.end(), 0);
    std::vector<char> is_sink(g_.order(), 0);
    for (Vertex t : sinks) is_sink[t] = 1;
    int value = 0;
    while (value < limit) {
      const Vertex hit = bfs(sources, is_sink);
      if (hit < 0) return value;
      // Walk back along the recorded edges.
      for (Vertex x = hit; via_[x] >= 0;) {
        const EdgeId e = via_[x];
        const Edge& ed = g_.edge(e);
        const Vertex prev = ed.other(x);
        flow_[e] += (prev == ed.u) ? 1 : -1;
        x = prev;
      }
      ++value;
    }
    return value;
  }

  const std::vector<char>& reach() const { return reach_; }

 private:
  Vertex bfs(const std::vector<Vertex>& sources, const std::vector<char>& is_sink) {
    std::fill(reach_.begin(), reach_.end(), 0);
    int head = 0, tail = 0;
    for (Vertex s : sources) {
      reach_[s] = 1;
      via_[s] = -1;
      queue_[tail++] = s;
    }
    while (head < tail) {
      const Vertex x = queue_[head++];
      for (int i = 0; i < g_.degree(x); ++i) {
        const auto [y, e] = g_.incidences(x)[i];
        if (reach_[y]) continue;
        const int f = (x == g_.edge(e).u) ? flow_[e] : -flow_[e];
        if (f >= 1) continue;  // residual 1 - f
        reach_[y] = 1;
        via_[y] = e;
        if (is_sink[y]) return y;
        queue_[tail++] = y;
      }
    }
    return -1;
  }

  const CubicGraph& g_;
  std::vector<int> flow_;
  std::vector<char> reach_;
  std::vector<EdgeId> via_;
  std::vector<Vertex> queue_;
};

// Connected vertex sets of size s (1..3). With `root` >= 0 only sets
// containing it.
std::vector<std::vector<Vertex>> seeds(const CubicGraph& g, int s, Vertex root) {
  std::vector<std::vector<Vertex>> out;
  auto push = [&](std::vector<Vertex> set) {
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) return;
    out.push_back(std::move(set));
  };
  const int n = g.order();
  for (Vertex c = 0; c < n; ++c) {
    if (s == 1) {
      if (root < 0 || c == root) push({c});
      continue;
    }
    for (int i = 0; i < g.degree(c); ++i) {
      const Vertex a = g.neighbour(c, i);
      if (s == 2) {
        if (c < a && (root < 0 || c == root || a == root)) push({c, a});
        continue;
      }
      for (int j = i + 1; j < g.degree(c); ++j) {
        const Vertex b = g.neighbour(c, j);
        if (root < 0 || c == root || a == root || b == root) push({a, c, b});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<CyclicCut> components_cut(const CubicGraph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (int i = 0; i < g.degree(x); ++i) {
        const Vertex y = g.neighbour(x, i);
        if (comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  if (count < 2) return std::nullopt;
  // Every component of a cubic graph contains a cycle.
  std::vector<char> side(n);
  for (Vertex v = 0; v < n; ++v) side[v] = comp[v] == 0;
  return make_cut(g, side);
}

}  // namespace

std::optional<CyclicCut> find_small_cyclic_cut(const CubicGraph& g, int k) {
  if (!g.is_complete()) throw GraphError("cyclic connectivity needs a complete cubic graph");
  if (k < 2 || k > 5) throw GraphError("cyclic connectivity threshold must be in 2..5");
  if (g.order() == 0) return std::nullopt;
  if (auto cut = components_cut(g)) return cut;

  // A minimum cyclic cut splits a connected graph into two connected shores,
  // both with cycles. Each shore then holds a connected (k-2)-set; one of
  // them contains vertex 0. Any cut of size < k between connected seeds of
  // that size is cyclic, so min-cut between seed pairs decides the question.
  const int s = std::max(1, k - 2);
  if (s == 3 && !g.is_simple()) {
    // A digon shore has only two vertices; test those shores directly.
    for (const Edge& e : g.edges()) {
      if (g.multiplicity(e.u, e.v) < 2) continue;
      std::vector<char> side(g.order(), 0);
      side[e.u] = side[e.v] = 1;
      CyclicCut cut = make_cut(g, side);
      if (static_cast<int>(cut.edges.size()) < k && is_cyclic(g, side)) return cut;
    }
  }
  const auto sources = seeds(g, s, 0);
  const auto sinks = seeds(g, s, -1);
  FlowSolver solver(g);
  std::vector<char> mark(g.order(), 0);
  for (const auto& t1 : sources) {
    for (Vertex v : t1) mark[v] = 1;
    for (const auto& t2 : sinks) {
      if (std::any_of(t2.begin(), t2.end(), [&](Vertex v) { return mark[v]; })) continue;
      if (solver.max_flow(t1, t2, k) < k) {
        CyclicCut cut = make_cut(g, solver.reach());
        if (static_cast<int>(cut.edges.size()) < k && is_cyclic(g, solver.reach())) return cut;
      }
    }
    for (Vertex v : t1) mark[v] = 0;
  }
  return std::nullopt;
}

bool is_cyclically_k_connected(const CubicGraph& g, int k) {
  return !find_small_cyclic_cut(g, k).has_value();
}

bool reduction_keeps_cyclic4(const CubicGraph& g, const EdgePair& pair) {
  const CubicGraph reduced = reduction(g, pair);
  if (!reduced.is_simple()) return false;
  return is_cyclically_k_connected(reduced, 4);
}

}  // namespace snark
