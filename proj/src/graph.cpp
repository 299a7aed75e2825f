#include "snark/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace snark {

CubicGraph::CubicGraph(int n, bool multigraph)
    : adj_(static_cast<size_t>(n)), deg_(static_cast<size_t>(n), 0), multigraph_(multigraph) {
  if (n < 0) throw GraphError("negative vertex count");
}

CubicGraph CubicGraph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                  bool multigraph) {
  CubicGraph g(n, multigraph);
  for (auto [v, w] : edges) g.add_edge(v, w);
  return g;
}

void CubicGraph::set_multigraph(bool on) {
  if (!on && !is_simple()) throw GraphError("graph has parallel edges");
  multigraph_ = on;
}

bool CubicGraph::adjacent(Vertex v, Vertex w) const {
  for (int i = 0; i < deg_[v]; ++i)
    if (adj_[v][i].to == w) return true;
  return false;
}

std::optional<EdgeId> CubicGraph::find_edge(Vertex v, Vertex w) const {
  for (int i = 0; i < deg_[v]; ++i)
    if (adj_[v][i].to == w) return adj_[v][i].edge;
  return std::nullopt;
}

int CubicGraph::multiplicity(Vertex v, Vertex w) const {
  int c = 0;
  for (int i = 0; i < deg_[v]; ++i) c += adj_[v][i].to == w;
  return c;
}

void CubicGraph::attach(Vertex v, Vertex w, EdgeId e) {
  adj_[v][deg_[v]++] = Incidence{w, e};
}

void CubicGraph::detach(Vertex v, EdgeId e) {
  auto& slots = adj_[v];
  for (int i = 0; i < deg_[v]; ++i) {
    if (slots[i].edge == e) {
      slots[i] = slots[deg_[v] - 1];
      slots[deg_[v] - 1] = Incidence{};
      --deg_[v];
      return;
    }
  }
}

EdgeId CubicGraph::add_edge(Vertex v, Vertex w) {
  const int n = order();
  if (v < 0 || w < 0 || v >= n || w >= n) throw GraphError("vertex out of range");
  if (v == w) throw GraphError("loops are not allowed");
  if (deg_[v] == 3 || deg_[w] == 3) throw GraphError("degree would exceed 3");
  if (!multigraph_ && adjacent(v, w)) throw GraphError("parallel edge in simple graph");
  const EdgeId e = size();
  edges_.push_back(Edge{v, w});
  attach(v, w, e);
  attach(w, v, e);
  return e;
}

void CubicGraph::remove_last_edge() {
  const EdgeId e = size() - 1;
  const Edge ed = edges_.back();
  // The edge was added last, so it occupies the last slot at both ends
  // unless later slots were compacted by remove_edge.
  detach(ed.u, e);
  detach(ed.v, e);
  edges_.pop_back();
}

void CubicGraph::remove_edge(EdgeId e) {
  const Edge ed = edges_[e];
  detach(ed.u, e);
  detach(ed.v, e);
  const EdgeId last = size() - 1;
  if (e != last) {
    const Edge moved = edges_[last];
    edges_[e] = moved;
    for (Vertex x : {moved.u, moved.v})
      for (int i = 0; i < deg_[x]; ++i)
        if (adj_[x][i].edge == last) adj_[x][i].edge = e;
  }
  edges_.pop_back();
}

bool CubicGraph::is_complete() const {
  return std::all_of(deg_.begin(), deg_.end(), [](uint8_t d) { return d == 3; });
}

bool CubicGraph::is_simple() const {
  for (Vertex v = 0; v < order(); ++v)
    for (int i = 0; i < deg_[v]; ++i)
      for (int j = i + 1; j < deg_[v]; ++j)
        if (adj_[v][i].to == adj_[v][j].to) return false;
  return true;
}

std::vector<std::pair<Vertex, Vertex>> CubicGraph::sorted_edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.low(), e.high());
  std::sort(out.begin(), out.end());
  return out;
}

bool CubicGraph::same_edges(const CubicGraph& other) const {
  return order() == other.order() && sorted_edge_list() == other.sorted_edge_list();
}

CubicGraph CubicGraph::relabelled(const std::vector<Vertex>& perm) const {
  CubicGraph g(order(), multigraph_);
  for (const Edge& e : edges_) g.add_edge(perm[e.u], perm[e.v]);
  return g;
}

std::string to_sparse(const CubicGraph& g) {
  std::ostringstream os;
  os << g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> nb;
    for (int i = 0; i < g.degree(v); ++i) nb.push_back(g.neighbour(v, i));
    std::sort(nb.begin(), nb.end());
    os << "; " << v << ':';
    for (size_t i = 0; i < nb.size(); ++i) os << (i ? "," : "") << nb[i];
  }
  return os.str();
}

CubicGraph from_sparse(const std::string& line) {
  std::istringstream is(line);
  std::string field;
  if (!std::getline(is, field, ';')) throw GraphError("sparse: empty line");
  int n = 0;
  try {
    n = std::stoi(field);
  } catch (const std::exception&) {
    throw GraphError("sparse: bad vertex count");
  }
  if (n < 0 || n > kMaxVertices) throw GraphError("sparse: vertex count out of range");
  std::map<std::pair<Vertex, Vertex>, int> half;  // (v,w) -> occurrences in v's list
  int seen = 0;
  while (std::getline(is, field, ';')) {
    const auto colon = field.find(':');
    if (colon == std::string::npos) throw GraphError("sparse: missing ':'");
    const int v = std::stoi(field.substr(0, colon));
    if (v < 0 || v >= n) throw GraphError("sparse: vertex out of range");
    std::istringstream ns(field.substr(colon + 1));
    std::string tok;
    while (std::getline(ns, tok, ',')) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      const int w = std::stoi(tok);
      if (w < 0 || w >= n) throw GraphError("sparse: neighbour out of range");
      ++half[{v, w}];
    }
    ++seen;
  }
  if (seen != n) throw GraphError("sparse: wrong number of vertex entries");
  CubicGraph g(n, true);
  for (const auto& [key, count] : half) {
    const auto [v, w] = key;
    auto it = half.find({w, v});
    if (it == half.end() || it->second != count) throw GraphError("sparse: asymmetric adjacency");
    if (v < w)
      for (int i = 0; i < count; ++i) g.add_edge(v, w);
  }
  if (g.is_simple()) g.set_multigraph(false);
  return g;
}

}  // namespace snark
