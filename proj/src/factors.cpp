#include "snark/factors.hpp"

#include <algorithm>

namespace snark {

FactorType TwoFactor::type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles) lengths.push_back(static_cast<int>(c.size()));
  return normalise_type(std::move(lengths));
}

int TwoFactor::odd_count() const {
  int k = 0;
  for (const auto& c : cycles) k += c.size() % 2;
  return k;
}

FactorType normalise_type(std::vector<int> lengths) {
  std::stable_sort(lengths.begin(), lengths.end(), [](int a, int b) {
    if (a % 2 != b % 2) return a % 2 > b % 2;
    return a < b;
  });
  return lengths;
}

std::vector<int> s1_of_type(const FactorType& type) {
  std::vector<int> odd, even;
  for (int l : type) (l % 2 ? odd : even).push_back(l);
  std::sort(odd.rbegin(), odd.rend());
  std::sort(even.rbegin(), even.rend());
  std::vector<int> out;
  for (int l : odd) out.push_back(-l);
  out.push_back(0);
  for (int l : even) out.push_back(-l);
  out.push_back(0);
  return out;
}

std::vector<int> s1_of(const TwoFactor& f) { return s1_of_type(f.type()); }

namespace {

class FactorSearch {
 public:
  FactorSearch(const CubicGraph& g, std::optional<EdgeId> required,
               const std::function<bool(const TwoFactor&)>& visit)
      : g_(g), visit_(visit), matched_(g.order(), 0), in_matching_(g.size(), 0),
        banned_(g.size(), 0) {
    if (required) banned_[*required] = 1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 2) matched_[v] = 1;
      else if (g.degree(v) != 3) throw GraphError("2-factors need degrees 2 or 3");
    }
  }

  bool run() { return step(0); }

 private:
  bool step(Vertex from) {
    const int n = g_.order();
    while (from < n && matched_[from]) ++from;
    if (from == n) return emit();
    matched_[from] = 1;
    for (int i = 0; i < 3; ++i) {
      const auto [w, e] = g_.incidences(from)[i];
      if (banned_[e] || matched_[w]) continue;
      matched_[w] = 1;
      in_matching_[e] = 1;
      const bool go_on = step(from + 1);
      in_matching_[e] = 0;
      matched_[w] = 0;
      if (!go_on) {
        matched_[from] = 0;
        return false;
      }
    }
    matched_[from] = 0;
    return true;
  }

  bool emit() {
    TwoFactor f;
    const int n = g_.order();
    for (EdgeId e = 0; e < g_.size(); ++e)
      if (in_matching_[e]) f.matching.push_back(e);
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> cyc;
      Vertex prev_edge = -1, x = s;
      // Orient towards the smaller factor neighbour of s.
      {
        Incidence a{-1, -1}, b{-1, -1};
        for (int i = 0; i < g_.degree(s); ++i) {
          const Incidence inc = g_.incidences(s)[i];
          if (in_matching_[inc.edge]) continue;
          (a.edge < 0 ? a : b) = inc;
        }
        if (b.to < a.to) std::swap(a, b);
        prev_edge = b.edge;  // leave along a
      }
      do {
        seen[x] = 1;
        cyc.push_back(x);
        Incidence next{-1, -1};
        for (int i = 0; i < g_.degree(x); ++i) {
          const Incidence inc = g_.incidences(x)[i];
          if (!in_matching_[inc.edge] && inc.edge != prev_edge) {
            next = inc;
            break;
          }
        }
        prev_edge = next.edge;
        x = next.to;
      } while (x != s);
      f.cycles.push_back(std::move(cyc));
    }
    std::stable_sort(f.cycles.begin(), f.cycles.end(), [](const auto& a, const auto& b) {
      const bool ao = a.size() % 2, bo = b.size() % 2;
      if (ao != bo) return ao;
      return a.size() < b.size();
    });
    return visit_(f);
  }

  const CubicGraph& g_;
  const std::function<bool(const TwoFactor&)>& visit_;
  std::vector<char> matched_;
  std::vector<char> in_matching_;
  std::vector<char> banned_;
};

void require_complete(const CubicGraph& g) {
  if (!g.is_complete()) throw GraphError("expected a complete cubic graph");
}

}  // namespace

bool for_each_2factor(const CubicGraph& g, std::optional<EdgeId> required,
                      const std::function<bool(const TwoFactor&)>& visit) {
  if (required && (*required < 0 || *required >= g.size()))
    throw GraphError("for_each_2factor: no such edge");
  FactorSearch search(g, required, visit);
  return search.run();
}

std::vector<TwoFactor> all_2factors(const CubicGraph& g) {
  std::vector<TwoFactor> out;
  for_each_2factor(g, std::nullopt, [&](const TwoFactor& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

bool is_class_two(const CubicGraph& g) {
  require_complete(g);
  return for_each_2factor(g, std::nullopt, [](const TwoFactor& f) { return !f.is_even(); });
}

namespace {

// Calls `on_cross(f, e)` for each edge e joining the two odd cycles of a
// 2-factor with exactly two odd cycles. Stops when it returns false.
template <class F>
void scan_two_odd(const CubicGraph& g, F&& on_cross) {
  require_complete(g);
  std::vector<int> which(g.order());
  bool class_one = false;
  for_each_2factor(g, std::nullopt, [&](const TwoFactor& f) {
    const int k = f.odd_count();
    if (k == 0) {
      class_one = true;
      return false;
    }
    if (k != 2) return true;
    std::fill(which.begin(), which.end(), -1);
    for (int c = 0; c < 2; ++c)
      for (Vertex v : f.cycles[c]) which[v] = c;
    for (EdgeId e : f.matching) {
      const Edge& ed = g.edge(e);
      if (which[ed.u] >= 0 && which[ed.v] >= 0 && which[ed.u] != which[ed.v])
        if (!on_cross(f, e)) return false;
    }
    return true;
  });
  if (class_one) throw GraphError("graph is class 1");
}

}  // namespace

std::vector<EdgeId> mark_undoublable_edges(const CubicGraph& g) {
  std::vector<char> marked(g.size(), 0);
  scan_two_odd(g, [&](const TwoFactor&, EdgeId e) {
    marked[e] = 1;
    return true;
  });
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (marked[e]) out.push_back(e);
  return out;
}

std::optional<StrongWitness> strong_witness(const CubicGraph& g) {
  std::optional<StrongWitness> found;
  scan_two_odd(g, [&](const TwoFactor& f, EdgeId e) {
    found = StrongWitness{f, e};
    return false;
  });
  // A class 1 graph may hit its even factor after a witness; check fully.
  if (found && !is_class_two(g)) throw GraphError("graph is class 1");
  return found;
}

bool is_strong_snark(const CubicGraph& g) { return !strong_witness(g).has_value(); }

bool witness_is_valid(const CubicGraph& g, const StrongWitness& w) {
  const auto& f = w.factor;
  if (f.odd_count() != 2 || f.cycles.size() < 2) return false;
  if (f.cycles[0].size() % 2 == 0 || f.cycles[1].size() % 2 == 0) return false;
  std::vector<int> seen(g.order(), -1);
  for (size_t c = 0; c < f.cycles.size(); ++c) {
    const auto& cyc = f.cycles[c];
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (seen[cyc[i]] >= 0) return false;
      seen[cyc[i]] = static_cast<int>(c);
      if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    }
  }
  if (std::count(seen.begin(), seen.end(), -1) != 0) return false;
  if (w.edge < 0 || w.edge >= g.size()) return false;
  const Edge& e = g.edge(w.edge);
  return (seen[e.u] == 0 && seen[e.v] == 1) || (seen[e.u] == 1 && seen[e.v] == 0);
}

}  // namespace snark
