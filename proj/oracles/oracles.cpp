#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "snark/graph6.hpp"

namespace snark::oracle {

namespace {

// Edges ordered by a BFS over vertices so that colour constraints bite early.
std::vector<EdgeId> bfs_edge_order(const CubicGraph& g) {
  std::vector<EdgeId> order;
  std::vector<char> used(g.size(), 0), seen(g.order(), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> queue{root};
    seen[root] = 1;
    for (size_t h = 0; h < queue.size(); ++h) {
      const Vertex x = queue[h];
      for (int i = 0; i < g.degree(x); ++i) {
        const Vertex y = g.incidences(x)[i].to;
        const EdgeId e = g.incidences(x)[i].edge;
        if (!used[e]) {
          used[e] = 1;
          order.push_back(e);
        }
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  return order;
}

bool colour_from(const CubicGraph& g, const std::vector<EdgeId>& order, size_t i,
                 std::vector<int>& used) {
  if (i == order.size()) return true;
  const Edge& e = g.edge(order[i]);
  const int free = ~(used[e.u] | used[e.v]) & 7;
  for (int c = 0; c < 3; ++c) {
    if (!(free >> c & 1)) continue;
    used[e.u] |= 1 << c;
    used[e.v] |= 1 << c;
    const bool ok = colour_from(g, order, i + 1, used);
    used[e.u] &= ~(1 << c);
    used[e.v] &= ~(1 << c);
    if (ok) return true;
    if (i == 0) break;  // colours are interchangeable for the first edge
  }
  return false;
}

}  // namespace

bool edge_colourable(const CubicGraph& g) {
  std::vector<int> used(g.order(), 0);
  return colour_from(g, bfs_edge_order(g), 0, used);
}

namespace {

template <class F>
void for_each_perfect_matching(const CubicGraph& g, F&& visit) {
  const int m = g.size();
  std::vector<int> last(g.order(), -1);
  for (EdgeId e = 0; e < m; ++e) last[g.edge(e).u] = last[g.edge(e).v] = e;
  std::vector<char> covered(g.order(), 0);
  std::vector<EdgeId> chosen;
  std::function<void(EdgeId)> rec = [&](EdgeId e) {
    if (e == m) {
      if (std::all_of(covered.begin(), covered.end(), [](char c) { return c; })) visit(chosen);
      return;
    }
    const Edge& ed = g.edge(e);
    if (!covered[ed.u] && !covered[ed.v]) {
      covered[ed.u] = covered[ed.v] = 1;
      chosen.push_back(e);
      rec(e + 1);
      chosen.pop_back();
      covered[ed.u] = covered[ed.v] = 0;
    }
    // Excluding e is fatal if it was an endpoint's last chance.
    if ((last[ed.u] == e && !covered[ed.u]) || (last[ed.v] == e && !covered[ed.v])) return;
    rec(e + 1);
  };
  rec(0);
}

}  // namespace

long count_perfect_matchings(const CubicGraph& g) {
  long count = 0;
  for_each_perfect_matching(g, [&](const std::vector<EdgeId>&) { ++count; });
  return count;
}

std::vector<std::vector<EdgeId>> two_factor_edge_sets(const CubicGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  for_each_perfect_matching(g, [&](const std::vector<EdgeId>& mm) {
    std::vector<char> in(g.size(), 0);
    for (EdgeId e : mm) in[e] = 1;
    std::vector<EdgeId> f;
    for (EdgeId e = 0; e < g.size(); ++e)
      if (!in[e]) f.push_back(e);
    out.push_back(std::move(f));
  });
  return out;
}

namespace {

// Number of components of (V, kept edges) that contain a cycle.
int cyclic_components(const CubicGraph& g, const std::vector<char>& removed) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!removed[e]) parent[find(g.edge(e).u)] = find(g.edge(e).v);
  std::vector<int> verts(n, 0), edges(n, 0);
  for (Vertex v = 0; v < n; ++v) ++verts[find(v)];
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!removed[e]) ++edges[find(g.edge(e).u)];
  int count = 0;
  for (Vertex v = 0; v < n; ++v)
    if (find(v) == v && edges[v] >= verts[v]) ++count;
  return count;
}

}  // namespace

std::optional<std::vector<EdgeId>> brute_force_cyclic_cut(const CubicGraph& g, int k) {
  const int m = g.size();
  std::vector<char> removed(m, 0);
  std::vector<EdgeId> pick;
  std::optional<std::vector<EdgeId>> found;
  std::function<bool(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      if (cyclic_components(g, removed) >= 2) {
        found = pick;
        return true;
      }
      return false;
    }
    for (int e = from; e < m; ++e) {
      removed[e] = 1;
      pick.push_back(e);
      if (rec(e + 1, left - 1)) return true;
      pick.pop_back();
      removed[e] = 0;
    }
    return false;
  };
  for (int s = 0; s < k; ++s)
    if (rec(0, s)) return found;
  return std::nullopt;
}

namespace {

// All bijections a -> b preserving adjacency and non-adjacency. Stops when
// `visit` returns false.
template <class F>
void for_each_isomorphism(const CubicGraph& a, const CubicGraph& b, F&& visit) {
  const int n = a.order();
  if (b.order() != n || a.size() != b.size()) return;
  // Vertex order: BFS so later vertices usually have a mapped neighbour.
  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    order.push_back(r);
    for (size_t h = order.size() - 1; h < order.size(); ++h)
      for (int i = 0; i < a.degree(order[h]); ++i) {
        const Vertex y = a.neighbour(order[h], i);
        if (!seen[y]) {
          seen[y] = 1;
          order.push_back(y);
        }
      }
  }
  std::vector<Vertex> map(n, -1);
  std::vector<char> taken(n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == n) {
      if (!visit(map)) stop = true;
      return;
    }
    const Vertex x = order[i];
    for (Vertex y = 0; y < n && !stop; ++y) {
      if (taken[y] || a.degree(x) != b.degree(y)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const Vertex u = order[j];
        ok = a.multiplicity(x, u) == b.multiplicity(y, map[u]);
      }
      if (!ok) continue;
      map[x] = y;
      taken[y] = 1;
      rec(i + 1);
      taken[y] = 0;
      map[x] = -1;
    }
  };
  rec(0);
}

}  // namespace

std::vector<Permutation> all_automorphisms(const CubicGraph& g) {
  std::vector<Permutation> out;
  for_each_isomorphism(g, g, [&](const std::vector<Vertex>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

long group_order(const std::vector<Permutation>& gens, int n) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> queue{id};
  for (size_t h = 0; h < queue.size(); ++h) {
    for (const auto& s : gens) {
      Permutation p(n);
      for (int v = 0; v < n; ++v) p[v] = s[queue[h][v]];
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return static_cast<long>(seen.size());
}

bool isomorphic(const CubicGraph& a, const CubicGraph& b) {
  bool found = false;
  for_each_isomorphism(a, b, [&](const std::vector<Vertex>&) {
    found = true;
    return false;
  });
  return found;
}

std::string min_graph6_over_all_orders(const CubicGraph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = to_graph6(g.relabelled(perm));
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<int> minimal_representing_string(const CubicGraph& g) {
  const int n = g.order();
  std::vector<int> best;
  for (const auto& fedges : two_factor_edge_sets(g)) {
    // Factor adjacency and the leftover neighbour of each vertex.
    std::vector<std::vector<Vertex>> fn(n);
    std::vector<char> in(g.size(), 0);
    for (EdgeId e : fedges) {
      in[e] = 1;
      fn[g.edge(e).u].push_back(g.edge(e).v);
      fn[g.edge(e).v].push_back(g.edge(e).u);
    }
    std::vector<Vertex> other(n, -1);
    for (EdgeId e = 0; e < g.size(); ++e)
      if (!in[e]) {
        other[g.edge(e).u] = g.edge(e).v;
        other[g.edge(e).v] = g.edge(e).u;
      }
    std::vector<std::vector<Vertex>> cycles;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> c{s};
      seen[s] = 1;
      Vertex prev = s, x = fn[s][0];
      while (x != s) {
        c.push_back(x);
        seen[x] = 1;
        const Vertex nx = fn[x][0] == prev ? fn[x][1] : fn[x][0];
        prev = x;
        x = nx;
      }
      cycles.push_back(c);
    }
    // Block order: odd lengths ascending, then even lengths ascending.
    auto rank = [](size_t len) { return std::pair<int, size_t>(len % 2 ? 0 : 1, len); };
    std::vector<int> idx(cycles.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return rank(cycles[a].size()) < rank(cycles[b].size()); });
    std::vector<int> odd, even;
    for (const auto& c : cycles) (c.size() % 2 ? odd : even).push_back(-static_cast<int>(c.size()));
    std::sort(odd.begin(), odd.end());
    std::sort(even.begin(), even.end());
    std::vector<int> s1 = odd;
    s1.push_back(0);
    s1.insert(s1.end(), even.begin(), even.end());
    s1.push_back(0);
    if (!best.empty() && std::lexicographical_compare(best.begin(), best.begin() + std::min(best.size(), s1.size()), s1.begin(), s1.end()) &&
        !std::equal(s1.begin(), s1.end(), best.begin()))
      continue;
    // Every assignment of cycles to blocks, start and direction.
    std::sort(idx.begin(), idx.end());
    do {
      bool fits = true;
      std::vector<size_t> sorted_len;
      for (int i : idx) sorted_len.push_back(cycles[i].size());
      for (size_t b = 0; b + 1 < idx.size() && fits; ++b)
        fits = rank(sorted_len[b]) <= rank(sorted_len[b + 1]);
      if (!fits) continue;
      const int k = static_cast<int>(idx.size());
      std::vector<int> start(k, 0), dir(k, 1);
      while (true) {
        std::vector<int> label(n);
        int at = 0;
        for (int b = 0; b < k; ++b) {
          const auto& c = cycles[idx[b]];
          const int len = static_cast<int>(c.size());
          for (int i = 0; i < len; ++i) label[c[((start[b] + dir[b] * i) % len + len) % len]] = at + i;
          at += len;
        }
        std::vector<int> s2(n);
        for (Vertex v = 0; v < n; ++v) s2[label[v]] = label[other[v]];
        std::vector<int> full = s1;
        full.insert(full.end(), s2.begin(), s2.end());
        if (best.empty() || full < best) best = full;
        int b = 0;
        for (; b < k; ++b) {
          if (dir[b] == 1) {
            dir[b] = -1;
            break;
          }
          dir[b] = 1;
          if (++start[b] < static_cast<int>(cycles[idx[b]].size())) break;
          start[b] = 0;
        }
        if (b == k) break;
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return best;
}

std::vector<CubicGraph> cubic_graphs(int n, int min_girth,
                                     const std::function<bool(const CubicGraph&)>& keep) {
  std::vector<CubicGraph> out;
  min_girth = std::max(min_girth, 3);
  const int smallest = min_girth >= 5 ? 10 : min_girth == 4 ? 6 : 4;
  if (n < smallest || n % 2 || n > 32) return out;
  // The neighbourhood of vertex 0 is forced; for girth >= 5 so is its
  // distance-2 tree on 0..9.
  std::vector<std::array<int, 3>> nb(n, {-1, -1, -1});
  std::vector<int> deg(n, 0);
  std::vector<uint32_t> adj(n, 0);
  auto link = [&](int a, int b) {
    nb[a][deg[a]++] = b;
    nb[b][deg[b]++] = a;
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  };
  auto unlink = [&](int a, int b) {
    --deg[a];
    --deg[b];
    adj[a] &= ~(1u << b);
    adj[b] &= ~(1u << a);
  };
  link(0, 1), link(0, 2), link(0, 3);
  int next = 4;
  if (min_girth >= 5) {
    link(1, 4), link(1, 5), link(2, 6), link(2, 7), link(3, 8), link(3, 9);
    next = 10;
  }
  std::set<std::string> seen;
  // Partners within distance girth-2 would close a short cycle.
  auto blocked_ball = [&](int v) {
    uint32_t b = 1u << v;
    for (int r = 0; r < min_girth - 2; ++r) {
      uint32_t nx = b;
      for (uint32_t m = b; m; m &= m - 1) nx |= adj[std::countr_zero(m)];
      b = nx;
    }
    return b;
  };
  // Complete one vertex at a time, always the one with the fewest choices;
  // its edges are added in increasing partner order.
  std::function<void(int, int)> rec = [&](int v, int last_w) {
    if (v < 0) {
      int best = -1, fewest = 1 << 30;
      for (int x = 0; x < next; ++x) {
        if (deg[x] == 3) continue;
        const uint32_t blocked = blocked_ball(x);
        int options = n - next;
        for (int w = 0; w < next; ++w)
          if (deg[w] < 3 && !(blocked >> w & 1)) ++options;
        if (options < 3 - deg[x]) return;
        if (options < fewest) {
          fewest = options;
          best = x;
        }
      }
      if (best < 0) {
        if (next != n) return;
        CubicGraph g(n);
        for (int a = 0; a < n; ++a)
          for (int i = 0; i < 3; ++i)
            if (nb[a][i] > a) g.add_edge(a, nb[a][i]);
        if (keep && !keep(g)) return;
        if (seen.insert(canonical_encoding(g)).second) out.push_back(g);
        return;
      }
      v = best;
    }
    const uint32_t blocked = blocked_ball(v);
    for (int w = last_w + 1; w < next; ++w) {
      if (deg[w] == 3 || (blocked >> w & 1)) continue;
      link(v, w);
      if (deg[v] == 3) rec(-1, -1);
      else rec(v, w);
      unlink(v, w);
    }
    if (next < n) {
      const int w = next++;
      link(v, w);
      if (deg[v] == 3) rec(-1, -1);
      else rec(v, w);
      unlink(v, w);
      --next;
    }
  };
  rec(-1, -1);
  return out;
}

std::vector<CubicGraph> cubic_girth5_graphs(int n, const std::function<bool(const CubicGraph&)>& keep) {
  return cubic_graphs(n, 5, keep);
}

std::vector<CubicGraph> naive_proper_snarks(int n) {
  return cubic_girth5_graphs(n, [](const CubicGraph& g) {
    return !edge_colourable(g) && !brute_force_cyclic_cut(g, 4).has_value();
  });
}

CubicGraph shuffled(const CubicGraph& g, uint64_t seed) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabelled(perm);
}

}  // namespace snark::oracle
