#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "snark/factors.hpp"
#include "snark/graph_ops.hpp"

using namespace snark;

namespace {

std::vector<std::vector<EdgeId>> factor_edge_sets(const CubicGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  for_each_2factor(g, std::nullopt, [&](const TwoFactor& f) {
    std::vector<char> in_matching(g.size(), 0);
    for (EdgeId e : f.matching) in_matching[e] = 1;
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < g.size(); ++e)
      if (!in_matching[e]) edges.push_back(e);
    out.push_back(edges);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

void check_factor_shape(const CubicGraph& g, const TwoFactor& f) {
  std::vector<int> seen(g.order(), 0);
  int total = 0;
  for (const auto& c : f.cycles) {
    CHECK(c.front() == *std::min_element(c.begin(), c.end()));
    for (size_t i = 0; i < c.size(); ++i) {
      ++seen[c[i]];
      CHECK(g.adjacent(c[i], c[(i + 1) % c.size()]));
    }
    total += static_cast<int>(c.size());
  }
  CHECK(total == g.order());
  CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
  const FactorType t = f.type();
  CHECK(t == normalise_type(t));
  CHECK(f.odd_count() % 2 == 0);
}

}  // namespace

TEST_CASE("2-factors of small graphs") {
  const auto pf = all_2factors(fixtures::petersen());
  CHECK(pf.size() == 6);
  for (const auto& f : pf) CHECK(f.type() == FactorType{5, 5});
  CHECK(oracle::count_perfect_matchings(fixtures::petersen()) == 6);

  const auto kf = all_2factors(fixtures::k33());
  CHECK(kf.size() == 6);
  for (const auto& f : kf) CHECK(f.type() == FactorType{6});

  CHECK(is_class_two(fixtures::petersen()));
  CHECK_FALSE(is_class_two(fixtures::cube()));
  CHECK_FALSE(is_class_two(fixtures::k4()));
  CHECK_THROWS(is_class_two(CubicGraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST_CASE("type order and S1") {
  CHECK(normalise_type({8, 5, 5}) == FactorType{5, 5, 8});
  CHECK(normalise_type({6, 4, 7, 5}) == FactorType{5, 7, 4, 6});
  CHECK(s1_of_type({5, 5, 8}) == std::vector<int>{-5, -5, 0, -8, 0});
  CHECK(s1_of_type({5, 13}) == std::vector<int>{-13, -5, 0, 0});
  CHECK(s1_of_type({5, 13}) < s1_of_type({5, 5, 8}));
  CHECK(s1_of_type({5, 7, 4, 6}) == std::vector<int>{-7, -5, 0, -6, -4, 0});
}

TEST_CASE("2-factors agree with perfect matchings on all cubic graphs up to 14 vertices") {
  for (int n = 4; n <= 14; n += 2)
    for (const auto& g : oracle::cubic_graphs(n, 3)) {
      auto mine = factor_edge_sets(g);
      auto theirs = oracle::two_factor_edge_sets(g);
      std::sort(theirs.begin(), theirs.end());
      CHECK(mine == theirs);
      bool even = false;
      for_each_2factor(g, std::nullopt, [&](const TwoFactor& f) {
        check_factor_shape(g, f);
        even |= f.is_even();
        return true;
      });
      const bool colourable = oracle::edge_colourable(g);
      CHECK(is_class_two(g) == !colourable);
      CHECK(even == colourable);
    }
}

TEST_CASE("class agrees with edge colouring on multigraphs") {
  // Edge reductions of cubic graphs give multigraphs whenever a triangle is
  // involved.
  int multigraphs = 0;
  for (int n = 6; n <= 12; n += 2)
    for (const auto& g : oracle::cubic_graphs(n, 3))
      for (EdgeId e = 0; e < g.size(); ++e) {
        CubicGraph r;
        try {
          r = edge_reduction(g, e);
        } catch (const GraphError&) {
          continue;
        }
        multigraphs += !r.is_simple();
        CHECK(is_class_two(r) == !oracle::edge_colourable(r));
        CHECK(static_cast<long>(all_2factors(r).size()) == oracle::count_perfect_matchings(r));
      }
  CHECK(multigraphs > 0);
}

TEST_CASE("required edge restricts the enumeration") {
  const CubicGraph g = fixtures::proper(18)[1];
  const auto all = all_2factors(g);
  for (EdgeId e = 0; e < g.size(); ++e) {
    long through = 0;
    for_each_2factor(g, e, [&](const TwoFactor& f) {
      CHECK(std::find(f.matching.begin(), f.matching.end(), e) == f.matching.end());
      ++through;
      return true;
    });
    const long expect = std::count_if(all.begin(), all.end(), [&](const TwoFactor& f) {
      return std::find(f.matching.begin(), f.matching.end(), e) == f.matching.end();
    });
    CHECK(through == expect);
  }
  // Early stop.
  int visits = 0;
  CHECK_FALSE(for_each_2factor(g, std::nullopt, [&](const TwoFactor&) { return ++visits < 2; }));
  CHECK(visits == 2);
}

TEST_CASE("degree-2 vertices keep both edges") {
  // Two 5-cycles joined by a single matching edge.
  CubicGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 1) % 5);
  }
  const EdgeId join = g.add_edge(0, 5);
  const auto fs = all_2factors(g);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].matching == std::vector<EdgeId>{join});
  CHECK(fs[0].type() == FactorType{5, 5});
}

TEST_CASE("marking undoublable edges") {
  const CubicGraph p = fixtures::petersen();
  CHECK(mark_undoublable_edges(p).size() == 15);
  CHECK_THROWS(mark_undoublable_edges(fixtures::cube()));

  for (int n : {18, 20})
    for (const auto& g : fixtures::proper(n)) {
      const auto marked = mark_undoublable_edges(g);
      const std::set<EdgeId> m(marked.begin(), marked.end());
      for (EdgeId e = 0; e < g.size(); ++e) {
        std::set<bool> verdicts;
        for (const auto& path : paths_through(g, e))
          verdicts.insert(oracle::edge_colourable(edge_doubling(g, path).graph));
        CHECK(verdicts.size() == 1);  // all four doublings agree
        CHECK(*verdicts.begin() == (m.count(e) == 1));
      }
    }
}

TEST_CASE("strong snark criterion") {
  const CubicGraph p = fixtures::petersen();
  CHECK_FALSE(is_strong_snark(p));
  const auto w = strong_witness(p);
  REQUIRE(w.has_value());
  CHECK(w->factor.type() == FactorType{5, 5});
  CHECK(witness_is_valid(p, *w));
  CHECK_THROWS(is_strong_snark(fixtures::cube()));

  for (int n : {10, 18, 20, 22})
    for (const auto& g : fixtures::proper(n)) {
      bool all_reductions_class_two = true;
      for (EdgeId e = 0; e < g.size(); ++e) all_reductions_class_two &= is_class_two(edge_reduction(g, e));
      CHECK(is_strong_snark(g) == all_reductions_class_two);
      CHECK_FALSE(is_strong_snark(g));
      const auto wit = strong_witness(g);
      REQUIRE(wit.has_value());
      CHECK(witness_is_valid(g, *wit));
      // The reduction at the witness edge is colourable.
      CHECK_FALSE(is_class_two(edge_reduction(g, wit->edge)));
    }
}

TEST_CASE("witness validation rejects tampering") {
  const CubicGraph p = fixtures::petersen();
  auto w = *strong_witness(p);
  // A factor edge never joins the two cycles.
  const Vertex a = w.factor.cycles[0][0], b = w.factor.cycles[0][1];
  w.edge = *p.find_edge(a, b);
  CHECK_FALSE(witness_is_valid(p, w));
}
