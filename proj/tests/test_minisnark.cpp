#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "snark/canonical.hpp"
#include "snark/connectivity.hpp"
#include "snark/graph6.hpp"
#include "snark/graph_ops.hpp"
#include "snark/minisnark.hpp"
#include "snark/repstring.hpp"

using namespace snark;
using fixtures::kBlanusaAlt;
using fixtures::kBlanusaCanonical;

namespace {

std::vector<int> zero_based(const std::vector<int>& s) {
  std::vector<int> out;
  for (int x : s) out.push_back(x - 1);
  return out;
}

std::vector<int> with_s1(const FactorType& t, const std::vector<int>& s2) {
  std::vector<int> out = s1_of_type(t);
  out.insert(out.end(), s2.begin(), s2.end());
  return out;
}

// Brute-force partition oracle for the factor types.
void partitions(int left, int min_part, std::vector<int>& cur, std::set<FactorType>& out, int g) {
  if (left == 0) {
    if (std::count_if(cur.begin(), cur.end(), [](int l) { return l % 2; }) >= 2) out.insert(normalise_type(cur));
    return;
  }
  for (int l = std::max(min_part, g); l <= left; ++l) {
    cur.push_back(l);
    partitions(left - l, l, cur, out, g);
    cur.pop_back();
  }
}

std::vector<std::string> run_encoded(const MinisnarkOptions& o) {
  std::vector<std::string> out;
  run_minisnark(o, [&](const Emission& e) { out.push_back(to_graph6(e.graph)); });
  return out;
}

}  // namespace

TEST_CASE("two representing strings of the Blanusa snark") {
  const CubicGraph g6 = fixtures::from_string({5, 5, 8}, kBlanusaAlt);
  const CubicGraph g7 = fixtures::from_string({5, 13}, kBlanusaCanonical);
  REQUIRE(g6.is_complete());
  REQUIRE(g7.is_complete());

  const auto l6 = fixtures::identity_labelling(g6, {5, 5, 8});
  const RepString r6 = s2_of(g6, l6.factor, l6.labelling);
  CHECK(r6.s1 == std::vector<int>{-5, -5, 0, -8, 0});
  CHECK(r6.s2 == zero_based(kBlanusaAlt));
  CHECK(r6.frontier() == 18);

  const auto l7 = fixtures::identity_labelling(g7, {5, 13});
  const RepString r7 = s2_of(g7, l7.factor, l7.labelling);
  CHECK(r7.s1 == std::vector<int>{-13, -5, 0, 0});
  CHECK(r7.s2 == zero_based(kBlanusaCanonical));
  CHECK(r7.joined() < r6.joined());

  // Both strings describe the same snark, one of the two on 18 vertices.
  CHECK(oracle::isomorphic(g6, g7));
  CHECK(is_class_two(g7));
  CHECK(is_cyclically_k_connected(g7, 4));
  const auto& eighteen = fixtures::proper(18);
  CHECK(std::count_if(eighteen.begin(), eighteen.end(),
                      [&](const CubicGraph& h) { return oracle::isomorphic(h, g7); }) == 1);

  // The canonical string is the minimum over all factors and labellings.
  CHECK(oracle::minimal_representing_string(g7) == with_s1({5, 13}, zero_based(kBlanusaCanonical)));
}

TEST_CASE("the generator reproduces the canonical Blanusa string") {
  MinisnarkOptions o;
  o.n = 18;
  bool found = false;
  for (const auto& e : generate_proper(o)) {
    CHECK(e.type == FactorType{5, 13});
    const auto l = fixtures::identity_labelling(e.graph, e.type);
    if (s2_of(e.graph, l.factor, l.labelling).s2 == zero_based(kBlanusaCanonical)) found = true;
  }
  CHECK(found);
}

TEST_CASE("legal labellings") {
  const CubicGraph g7 = fixtures::from_string({5, 13}, kBlanusaCanonical);
  const auto l7 = fixtures::identity_labelling(g7, {5, 13});
  CHECK(is_legal(l7.factor, l7.labelling));
  CHECK(all_legal_labellings(l7.factor).size() == 5 * 2 * 13 * 2);
  for (const auto& l : all_legal_labellings(l7.factor)) CHECK(is_legal(l7.factor, l));

  const CubicGraph g6 = fixtures::from_string({5, 5, 8}, kBlanusaAlt);
  const auto l6 = fixtures::identity_labelling(g6, {5, 5, 8});
  CHECK(all_legal_labellings(l6.factor).size() == 2 * 10 * 10 * 16);

  LegalLabelling bad = l7.labelling;
  std::swap(bad.label[0], bad.label[2]);  // breaks consecutiveness along the cycle
  CHECK_FALSE(is_legal(l7.factor, bad));
  CHECK_THROWS(s2_of(g7, l7.factor, bad));
}

TEST_CASE("factor types") {
  CHECK(enumerate_types(10, 5) == std::vector<FactorType>{{5, 5}});
  CHECK(enumerate_types(18, 5) == std::vector<FactorType>{{5, 13}, {7, 11}, {9, 9}, {5, 7, 6}, {5, 5, 8}});
  for (int n = 10; n <= 40; n += 2)
    for (int g : {5, 6, 7}) {
      std::set<FactorType> expect;
      std::vector<int> cur;
      partitions(n, g, cur, expect, g);
      const auto got = enumerate_types(n, g);
      CHECK(std::set<FactorType>(got.begin(), got.end()) == expect);
      CHECK(got.size() == expect.size());
      for (size_t i = 1; i < got.size(); ++i) CHECK(s1_of_type(got[i - 1]) < s1_of_type(got[i]));
      for (const auto& t : enumerate_types(n, g, true)) CHECK(t.size() > 2);
    }
  const auto t38 = enumerate_types(38, 5);
  CHECK(std::find(t38.begin(), t38.end(), FactorType{5, 5, 5, 5, 5, 7, 6}) != t38.end());
}

TEST_CASE("initial graphs") {
  const auto ig = initial_graph({5, 7, 4, 6});
  CHECK(ig.graph.order() == 22);
  for (Vertex v = 0; v < 22; ++v) CHECK(ig.graph.degree(v) == 2);
  CHECK(ig.factor.type() == FactorType{5, 7, 4, 6});
  // Cycles occupy consecutive labels in type order.
  CHECK(ig.graph.adjacent(0, 4));
  CHECK(ig.graph.adjacent(5, 11));
  CHECK(ig.graph.adjacent(12, 15));
  CHECK(ig.graph.adjacent(16, 21));
  CHECK(is_legal(ig.factor, ig.labelling));
  for (Vertex v = 0; v < 22; ++v) CHECK(ig.labelling.label[v] == v);
  const RepString r = s2_of(ig.graph, ig.factor, ig.labelling);
  CHECK(r.frontier() == 0);
  CHECK(std::all_of(r.s2.begin(), r.s2.end(), [](int x) { return x == kUndefined; }));

  const auto p = initial_graph({5, 5});
  CHECK(p.graph.adjacent(0, 4));
  CHECK(p.graph.adjacent(5, 9));
  CHECK_FALSE(p.graph.adjacent(4, 5));
}

TEST_CASE("prefix comparison") {
  const auto ig = initial_graph({5, 13});
  const RepString ref = s2_of(ig.graph, ig.factor, ig.labelling);
  const auto self = beats_prefix(ig.graph, ig.factor, ref);
  CHECK(self.verdict == PrefixVerdict::kNotSmaller);
  CHECK_FALSE(self.resume.empty());

  // On a complete graph: the canonical labelling is never beaten, and every
  // labelling with a larger string is beaten.
  const CubicGraph g7 = fixtures::from_string({5, 13}, kBlanusaCanonical);
  const auto l7 = fixtures::identity_labelling(g7, {5, 13});
  const RepString best = s2_of(g7, l7.factor, l7.labelling);
  for (const auto& f : all_2factors(g7))
    if (s1_of(f) == best.s1) CHECK(beats_prefix(g7, f, best).verdict == PrefixVerdict::kNotSmaller);
  int larger = 0;
  for (const auto& l : all_legal_labellings(l7.factor)) {
    const RepString r = s2_of(g7, l7.factor, l);
    if (r.s2 == best.s2) continue;
    ++larger;
    CHECK(beats_prefix(g7, l7.factor, r).verdict == PrefixVerdict::kSmaller);
  }
  CHECK(larger > 0);
}

TEST_CASE("small proper snark counts") {
  const std::map<int, size_t> expect = {{10, 1}, {12, 0}, {14, 0}, {16, 0}, {18, 2}, {20, 6}, {22, 20}};
  for (const auto& [n, count] : expect) CHECK(fixtures::proper(n).size() == count);
  CHECK(oracle::isomorphic(fixtures::proper(10)[0], fixtures::petersen()));

  MinisnarkOptions o;
  o.n = 18;
  o.girth = 6;
  CHECK(generate_proper(o).empty());
}

TEST_CASE("emitted graphs are snarks with their canonical string") {
  for (int n = 10; n <= 22; n += 2) {
    MinisnarkOptions o;
    o.n = n;
    std::set<std::string> seen;
    for (const auto& e : generate_proper(o)) {
      const CubicGraph& g = e.graph;
      CHECK(g.is_complete());
      CHECK(girth(g) >= 5);
      CHECK(is_class_two(g));
      CHECK(is_cyclically_k_connected(g, 4));
      CHECK(seen.insert(canonical_encoding(g)).second);
      const auto l = fixtures::identity_labelling(g, e.type);
      CHECK(with_s1(e.type, s2_of(g, l.factor, l.labelling).s2) == oracle::minimal_representing_string(g));
    }
  }
}

TEST_CASE("generation matches the naive oracle up to 18 vertices") {
  for (int n = 10; n <= 18; n += 2) {
    std::set<std::string> mine, naive;
    for (const auto& g : fixtures::proper(n)) mine.insert(canonical_encoding(g));
    for (const auto& g : oracle::naive_proper_snarks(n)) naive.insert(canonical_encoding(g));
    CHECK(mine == naive);
  }
}

TEST_CASE("speedups, splitting and determinism do not change the output") {
  MinisnarkOptions base;
  base.n = 20;
  const auto ref = run_encoded(base);
  CHECK(ref.size() == 6);
  CHECK(run_encoded(base) == ref);

  MinisnarkOptions no_a = base;
  no_a.speedup_a = false;
  CHECK(run_encoded(no_a) == ref);
  MinisnarkOptions no_b = base;
  no_b.speedup_b = false;
  CHECK(run_encoded(no_b) == ref);
  MinisnarkOptions guard_off = base;
  guard_off.final_class_check = false;
  CHECK(run_encoded(guard_off) == ref);

  for (int mod : {2, 3, 7}) {
    std::multiset<std::string> parts;
    for (int res = 0; res < mod; ++res) {
      MinisnarkOptions o = base;
      o.mod = mod;
      o.res = res;
      for (auto& s : run_encoded(o)) parts.insert(s);
    }
    CHECK(parts == std::multiset<std::string>(ref.begin(), ref.end()));
  }

  MinisnarkOptions threaded = base;
  threaded.threads = 3;
  CHECK(run_encoded(threaded) == ref);
}

TEST_CASE("strong mode") {
  for (int n = 10; n <= 22; n += 2) {
    MinisnarkOptions o;
    o.n = n;
    o.strong = true;
    MinisnarkStats st;
    CHECK(generate_proper(o, &st).empty());
  }
}

TEST_CASE("invalid options") {
  MinisnarkOptions o;
  o.n = 11;
  CHECK_THROWS(generate_proper(o));
  o.n = 20;
  o.mod = 2;
  o.res = 2;
  CHECK_THROWS(generate_proper(o));
}
