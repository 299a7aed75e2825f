#include "snark/tetration.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

#include "snark/canonical.hpp"
#include "snark/connectivity.hpp"
#include "snark/factors.hpp"
#include "snark/graph_ops.hpp"

namespace snark {

namespace {

void check_parent(const CubicGraph& g) {
  if (!g.is_complete() || !g.is_simple()) throw GraphError("tetration parent is not simple cubic");
  if (!is_cyclically_k_connected(g, 4)) throw GraphError("tetration parent is not cyclically 4-connected");
}

// Children of one parent in a fixed order.
void expand(const CubicGraph& parent, TetrationStats& st, std::vector<CubicGraph>& out) {
  check_parent(parent);
  const auto marked = mark_undoublable_edges(parent);  // throws on class 1
  std::vector<char> is_marked(parent.size(), 0);
  for (EdgeId e : marked) is_marked[e] = 1;
  const auto classes = doubling_equivalence_classes(parent, canonical_form(parent).generators);
  st.classes += static_cast<long>(classes.size());
  for (const auto& cls : classes) {
    const EdgePath& rep = cls.front();
    if (is_marked[rep.e2]) continue;
    DoublingResult child = edge_doubling(parent, rep);
    ++st.doubled;
    if (in_canonical_orbit(child.graph, child.reduction_pair)) {
      ++st.accepted;
      out.push_back(std::move(child.graph));
    }
  }
}

}  // namespace

TetrationStats generate_g4_level(const std::vector<CubicGraph>& parents,
                                 const std::function<void(const CubicGraph&)>& sink, int threads) {
  TetrationStats total;
  total.parents = static_cast<long>(parents.size());
  threads = std::max(1, threads);
  if (threads == 1) {
    std::vector<CubicGraph> buf;
    for (const auto& p : parents) {
      buf.clear();
      expand(p, total, buf);
      for (const auto& c : buf) sink(c);
    }
    return total;
  }
  std::vector<std::vector<CubicGraph>> per_parent(parents.size());
  std::vector<TetrationStats> st(threads);
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (size_t i = t; i < parents.size(); i += threads) expand(parents[i], st[t], per_parent[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  for (const auto& s : st) {
    total.classes += s.classes;
    total.doubled += s.doubled;
    total.accepted += s.accepted;
  }
  for (const auto& list : per_parent)
    for (const auto& c : list) sink(c);
  return total;
}

std::vector<CubicGraph> generate_g4(const std::vector<CubicGraph>& parents, TetrationStats* stats,
                                    int threads) {
  std::vector<CubicGraph> out;
  const auto st = generate_g4_level(parents, [&](const CubicGraph& g) { out.push_back(g); }, threads);
  if (stats) *stats = st;
  return out;
}

std::vector<std::string> naive_g4_encodings(const std::vector<CubicGraph>& parents) {
  std::set<std::string> seen;
  for (const auto& p : parents) {
    for (EdgeId e2 = 0; e2 < p.size(); ++e2) {
      for (const EdgePath& path : paths_through(p, e2)) {
        const CubicGraph child = edge_doubling(p, path).graph;
        if (!is_class_two(child) || !is_cyclically_k_connected(child, 4)) continue;
        seen.insert(canonical_encoding(child));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool verify_level_isomorph_free(const std::vector<CubicGraph>& output,
                                const std::vector<CubicGraph>& parents) {
  std::vector<std::string> enc;
  for (const auto& g : output) enc.push_back(canonical_encoding(g));
  std::sort(enc.begin(), enc.end());
  if (std::adjacent_find(enc.begin(), enc.end()) != enc.end()) return false;
  return enc == naive_g4_encodings(parents);
}

}  // namespace snark
