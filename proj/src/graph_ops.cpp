#include "snark/graph_ops.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace snark {

int girth(const CubicGraph& g) {
  const int n = g.order();
  int best = kInfiniteGirth;
  std::vector<int> dist(n), parent_edge(n);
  std::vector<Vertex> queue(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent_edge[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const Vertex x = queue[head++];
      if (2 * dist[x] + 1 >= best) break;
      for (int i = 0; i < g.degree(x); ++i) {
        const auto [y, e] = g.incidences(x)[i];
        if (e == parent_edge[x]) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent_edge[y] = e;
          queue[tail++] = y;
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

namespace {

Vertex shared_vertex(const Edge& a, const Edge& b) {
  if (b.has(a.u)) return a.u;
  if (b.has(a.v)) return a.v;
  return -1;
}

CubicGraph rebuild(int n, const std::vector<Edge>& edges, bool multigraph) {
  CubicGraph g(n, multigraph);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

// Drops degree-0 vertices listed in `gone`, mapping survivors onto 0..n-k-1
// in their original order.
CubicGraph compact(int n, const std::vector<Edge>& edges, const std::vector<bool>& gone,
                   bool multigraph) {
  std::vector<Vertex> map(n, -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v]) map[v] = next++;
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back(Edge{map[e.u], map[e.v]});
  CubicGraph g = rebuild(next, out, true);
  if (!multigraph && g.is_simple()) g.set_multigraph(false);
  return g;
}

}  // namespace

DoublingResult edge_doubling(const CubicGraph& g, const EdgePath& path) {
  const int m = g.size();
  auto valid = [m](EdgeId e) { return e >= 0 && e < m; };
  if (!valid(path.e1) || !valid(path.e2) || !valid(path.e3) || path.e1 == path.e2 ||
      path.e2 == path.e3 || path.e1 == path.e3)
    throw GraphError("edge_doubling: not a path of three distinct edges");
  const Edge e1 = g.edge(path.e1), e2 = g.edge(path.e2), e3 = g.edge(path.e3);
  const Vertex x = shared_vertex(e1, e2);
  const Vertex y = shared_vertex(e3, e2);
  if (x < 0 || y < 0 || x == y || e1.has(y) || e3.has(x))
    throw GraphError("edge_doubling: edges do not form a path");
  const int n = g.order();
  const Vertex a = n, b = n + 1;
  std::vector<Edge> edges = g.edges();
  edges[path.e1] = Edge{e1.other(x), a};
  edges[path.e3] = Edge{e3.other(y), b};
  edges.push_back(Edge{a, x});
  edges.push_back(Edge{b, y});
  edges.push_back(Edge{a, b});
  DoublingResult out{rebuild(n + 2, edges, g.multigraph()), {}};
  out.reduction_pair = EdgePair{m + 2, path.e2};
  return out;
}

bool is_opposite_pair(const CubicGraph& g, EdgeId a, EdgeId b) {
  if (a == b) return false;
  const Edge ea = g.edge(a), eb = g.edge(b);
  if (eb.has(ea.u) || eb.has(ea.v)) return false;
  return (g.adjacent(ea.u, eb.u) && g.adjacent(ea.v, eb.v)) ||
         (g.adjacent(ea.u, eb.v) && g.adjacent(ea.v, eb.u));
}

CubicGraph reduction(const CubicGraph& g, const EdgePair& pair) {
  if (pair.first < 0 || pair.second < 0 || pair.first >= g.size() || pair.second >= g.size() ||
      !is_opposite_pair(g, pair.first, pair.second))
    throw GraphError("reduction: edges are not opposite on a 4-cycle");
  return edge_reduction(g, pair.first);
}

CubicGraph edge_reduction(const CubicGraph& g, EdgeId e) {
  if (e < 0 || e >= g.size()) throw GraphError("edge_reduction: no such edge");
  const int n = g.order();
  CubicGraph work = rebuild(n, g.edges(), true);
  const Edge removed = g.edge(e);
  work.remove_edge(e);
  std::vector<bool> gone(n, false);
  for (Vertex v : {removed.u, removed.v}) {
    if (work.degree(v) != 2) continue;
    const auto inc = work.incidences(v);
    const Vertex s = inc[0].to, t = inc[1].to;
    if (s == t) throw GraphError("edge_reduction: a loop would arise");
    // Remove the higher id first so the lower id stays valid.
    work.remove_edge(std::max(inc[0].edge, inc[1].edge));
    work.remove_edge(std::min(inc[0].edge, inc[1].edge));
    work.add_edge(s, t);
    gone[v] = true;
  }
  return compact(n, work.edges(), gone, g.multigraph());
}

InsertionResult edge_insertion(const CubicGraph& g, EdgeId e, EdgeId f) {
  if (e < 0 || f < 0 || e >= g.size() || f >= g.size())
    throw GraphError("edge_insertion: no such edge");
  const int n = g.order();
  const Vertex s = n, t = n + 1;
  std::vector<Edge> edges = g.edges();
  bool multigraph = g.multigraph();
  if (e != f) {
    const Edge ee = g.edge(e), ef = g.edge(f);
    edges[e] = Edge{ee.u, s};
    edges.push_back(Edge{s, ee.v});
    edges[f] = Edge{ef.u, t};
    edges.push_back(Edge{t, ef.v});
  } else {
    const Edge ee = g.edge(e);
    edges[e] = Edge{ee.u, s};
    edges.push_back(Edge{s, t});
    edges.push_back(Edge{t, ee.v});
    multigraph = true;
  }
  edges.push_back(Edge{s, t});
  InsertionResult out{rebuild(n + 2, edges, multigraph), static_cast<EdgeId>(edges.size()) - 1};
  return out;
}

CubicGraph remove_vertices(const CubicGraph& g, const std::vector<Vertex>& doomed) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : doomed) gone[v] = true;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) kept.push_back(e);
  return compact(g.order(), kept, gone, g.multigraph());
}

std::vector<FourCycle> four_cycles(const CubicGraph& g) {
  std::set<std::array<Vertex, 4>> seen;
  std::vector<FourCycle> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (int i = 0; i < g.degree(a); ++i) {
      for (int j = i + 1; j < g.degree(a); ++j) {
        const Vertex b = g.neighbour(a, i), d = g.neighbour(a, j);
        if (b == d) continue;
        for (int k = 0; k < g.degree(b); ++k) {
          const Vertex c = g.neighbour(b, k);
          if (c == a || c == d || !g.adjacent(c, d)) continue;
          // Normalise: rotate so the smallest vertex comes first, and
          // orient towards its smaller neighbour on the cycle.
          std::array<Vertex, 4> cyc{a, b, c, d};
          const auto lo = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
          std::rotate(cyc.begin(), cyc.begin() + lo, cyc.end());
          if (cyc[3] < cyc[1]) std::swap(cyc[1], cyc[3]);
          if (seen.insert(cyc).second) out.push_back(FourCycle{cyc});
        }
      }
    }
  }
  return out;
}

std::array<EdgePair, 2> opposite_pairs(const CubicGraph& g, const FourCycle& c) {
  const auto& v = c.vertices;
  auto id = [&](Vertex x, Vertex y) {
    auto e = g.find_edge(x, y);
    if (!e) throw GraphError("opposite_pairs: not a cycle of the graph");
    return *e;
  };
  return {EdgePair{id(v[0], v[1]), id(v[2], v[3])}, EdgePair{id(v[1], v[2]), id(v[3], v[0])}};
}

std::vector<EdgePath> paths_through(const CubicGraph& g, EdgeId e2) {
  const Edge mid = g.edge(e2);
  const Vertex x = mid.low(), y = mid.high();
  std::vector<EdgePath> out;
  for (int i = 0; i < g.degree(x); ++i) {
    const EdgeId a = g.incidences(x)[i].edge;
    if (a == e2) continue;
    for (int j = 0; j < g.degree(y); ++j) {
      const EdgeId c = g.incidences(y)[j].edge;
      if (c == e2 || c == a) continue;
      out.push_back(EdgePath{a, e2, c});
    }
  }
  return out;
}

}  // namespace snark
