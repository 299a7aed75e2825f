// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Level lists come from a Pipeline cache directory and are
// computed on first use.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "snark/canonical.hpp"
#include "snark/connectivity.hpp"
#include "snark/factors.hpp"
#include "snark/graph6.hpp"
#include "snark/graph_ops.hpp"
#include "snark/minisnark.hpp"
#include "snark/pipeline.hpp"
#include "snark/strong.hpp"
#include "snark/tetration.hpp"

using namespace snark;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects mismatches of one criterion.
struct Report {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

template <class T>
std::string str(const T& x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

std::set<std::string> encodings(const std::vector<CubicGraph>& gs) {
  std::set<std::string> s;
  for (const auto& g : gs) s.insert(canonical_encoding(g));
  return s;
}

std::vector<std::string> run_encoded(const MinisnarkOptions& o) {
  std::vector<std::string> out;
  run_minisnark(o, [&](const Emission& e) { out.push_back(to_graph6(e.graph)); });
  return out;
}

using VertexPairs = std::set<std::pair<Vertex, Vertex>>;

VertexPairs as_set(const CubicGraph& g, const EdgePair& p, const Permutation* perm = nullptr) {
  VertexPairs out;
  for (EdgeId e : {p.first, p.second}) {
    Vertex u = g.edge(e).u, v = g.edge(e).v;
    if (perm) u = (*perm)[u], v = (*perm)[v];
    out.emplace(std::min(u, v), std::max(u, v));
  }
  return out;
}

struct Context {
  Pipeline& pipe;
  int max_n;
};

// 1. Proper snark counts and generation time.
void proper_counts(Context& c, Report& r) {
  const std::map<int, size_t> expect = {{10, 1}, {12, 0}, {14, 0}, {16, 0}, {18, 2},
                                        {20, 6}, {22, 20}, {24, 38}, {26, 280}, {28, 2900}};
  double through26 = 0;
  for (const auto& [n, count] : expect) {
    if (n > c.max_n) continue;
    const size_t got = c.pipe.proper(n).size();
    r.expect(got == count, "n=" + str(n) + ": " + str(got) + " != " + str(count));
    const double sec = c.pipe.manifest().at("proper_g5_n" + str(n)).seconds;
    if (n <= 26) through26 += sec;
    if (n == 28) {
      r.expect(sec <= 7200, "n=28 took " + fmt_seconds(sec));
      r.note("n=28 " + fmt_seconds(sec));
    }
  }
  r.expect(through26 <= 600, "through n=26 took " + fmt_seconds(through26));
  r.note("through n=26 " + fmt_seconds(through26));
}

// 2. Girth 4 snark counts.
void g4_counts(Context& c, Report& r) {
  const std::map<int, size_t> expect = {{12, 0}, {14, 0}, {16, 0}, {18, 0}, {20, 0},
                                        {22, 11}, {24, 117}, {26, 1017}, {28, 9617}};
  double total = 0;
  for (const auto& [n, count] : expect) {
    if (n > c.max_n) continue;
    const auto& gs = c.pipe.g4(n);
    r.expect(gs.size() == count, "n=" + str(n) + ": " + str(gs.size()) + " != " + str(count));
    total += c.pipe.manifest().at("g4_n" + str(n)).seconds;
    for (const auto& g : gs) r.expect(girth(g) == 4, "n=" + str(n) + ": output with girth != 4");
  }
  r.expect(total <= 1800, "tetration took " + fmt_seconds(total));
  r.note("tetration " + fmt_seconds(total));
}

// 3. Girth 6.
void girth_six(Context& c, Report& r) {
  for (int n = 10; n <= c.max_n; n += 2) {
    long filtered = 0;
    for (const auto& g : c.pipe.proper(n)) filtered += girth(g) >= 6;
    const long expect = n == 28 ? 1 : 0;
    r.expect(filtered == expect, "n=" + str(n) + ": " + str(filtered) + " proper snarks with girth >= 6");
  }
  if (c.max_n >= 28) {
    MinisnarkOptions o;
    o.n = 28;
    o.girth = 6;
    const auto t0 = Clock::now();
    const auto direct = generate_proper(o);
    const double sec = since(t0);
    r.expect(direct.size() == 1, "direct run at n=28: " + str(direct.size()));
    r.expect(sec <= 7200, "direct run took " + fmt_seconds(sec));
    r.note("direct girth-6 run " + fmt_seconds(sec));
    if (direct.size() == 1) {
      std::vector<CubicGraph> filtered;
      for (const auto& g : c.pipe.proper(28))
        if (girth(g) >= 6) filtered.push_back(g);
      r.expect(encodings(filtered) == encodings({direct[0].graph}), "direct and filtered graphs differ");
    }
  }
}

// 4. Cyclically 5-connected proper snarks.
void cyclic5(Context& c, Report& r) {
  const std::map<int, long> expect = {{10, 1}, {18, 0}, {20, 1}, {22, 2}, {24, 2}, {26, 10}, {28, 75}};
  for (const auto& [n, count] : expect) {
    if (n > c.max_n) continue;
    long got = 0;
    for (const auto& g : c.pipe.proper(n)) got += is_cyclically_k_connected(g, 5);
    r.expect(got == count, "n=" + str(n) + ": " + str(got) + " != " + str(count));
  }
}

// 5. No strong snarks.
void strong(Context& c, Report& r) {
  for (int n = 10; n <= c.max_n; n += 2) {
    r.expect(c.pipe.strong_filtered(n).empty(), "filter found a strong snark at n=" + str(n));
    r.expect(c.pipe.strong_mode(n).empty(), "strong mode emitted a graph at n=" + str(n));
    r.expect(c.pipe.strong_inserted(n).empty(), "insertion found a strong snark at n=" + str(n));
  }
}

// 6. Canonical 2-factor types.
void types(Context& c, Report& r) {
  auto histogram = [&](int n) {
    std::map<FactorType, long> h;
    for (const auto& t : c.pipe.proper_types(n)) ++h[t];
    return h;
  };
  if (c.max_n >= 24) {
    const auto h = histogram(24);
    r.expect(h == std::map<FactorType, long>{{{5, 19}, 38}}, "n=24 type histogram differs");
  }
  if (c.max_n >= 26) {
    const auto h = histogram(26);
    r.expect(h == std::map<FactorType, long>{{{5, 21}, 279}, {{13, 13}, 1}}, "n=26 type histogram differs");
  }
  // The stored type is the type of a 2-factor of the graph with the
  // smallest S1 (spot check on all graphs up to 26).
  for (int n = 10; n <= std::min(c.max_n, 26); n += 2) {
    const auto& gs = c.pipe.proper(n);
    const auto& ts = c.pipe.proper_types(n);
    for (size_t i = 0; i < gs.size(); ++i) {
      std::vector<int> best;
      for (const auto& f : all_2factors(gs[i]))
        if (f.odd_count() >= 2 && (best.empty() || s1_of(f) < best)) best = s1_of(f);
      r.expect(best == s1_of_type(ts[i]), "n=" + str(n) + " graph " + str(i) + ": stored type is not minimal");
    }
  }
}

// 7. Oracle equivalence.
void oracles(Context& c, Report& r, int naive_max) {
  const auto t0 = Clock::now();
  for (int n = 10; n <= std::min(naive_max, c.max_n); n += 2) {
    const bool same = encodings(c.pipe.proper(n)) == encodings(oracle::naive_proper_snarks(n));
    r.expect(same, "minisnark differs from the naive pipeline at n=" + str(n));
  }
  for (int n = 12; n <= std::min(26, c.max_n); n += 2) {
    // All doublings of all parents, coloured by the backtracking oracle.
    std::set<std::string> naive;
    for (const auto& p : c.pipe.snarks(n - 2))
      for (EdgeId e2 = 0; e2 < p.size(); ++e2)
        for (const auto& path : paths_through(p, e2)) {
          const CubicGraph child = edge_doubling(p, path).graph;
          if (oracle::edge_colourable(child) || !is_cyclically_k_connected(child, 4)) continue;
          naive.insert(canonical_encoding(child));
        }
    const auto& out = c.pipe.g4(n);
    const auto enc = encodings(out);
    r.expect(enc.size() == out.size(), "tetration output has isomorphic members at n=" + str(n));
    r.expect(enc == naive, "tetration differs from naive doubling at n=" + str(n));
  }
  const double sec = since(t0);
  r.expect(sec <= 1800, "oracle comparison took " + fmt_seconds(sec));
  r.note("naive minisnark to n=" + str(std::min(naive_max, c.max_n)) + ", " + fmt_seconds(sec));
}

// 8. Structural property suites.
void properties(Context& c, Report& r) {
  std::vector<CubicGraph> girth4;  // all cubic graphs with girth >= 4 up to 16 vertices
  for (int n = 6; n <= 16; n += 2)
    for (const auto& g : oracle::cubic_graphs(n, 4)) girth4.push_back(g);
  std::vector<CubicGraph> snarks;  // all snarks up to 24 vertices
  for (int n = 10; n <= std::min(24, c.max_n); n += 2) {
    const auto s = c.pipe.snarks(n);
    snarks.insert(snarks.end(), s.begin(), s.end());
  }
  std::map<std::string, long> count;

  // Class equivalence under removal of a 4-cycle.
  auto removal_check = [&](const CubicGraph& g) {
    for (const auto& z : four_cycles(g)) {
      const CubicGraph rest = remove_vertices(g, {z.vertices.begin(), z.vertices.end()});
      r.expect(oracle::edge_colourable(g) == oracle::edge_colourable(rest), "4-cycle removal changed the class");
      ++count["4-cycle removal"];
    }
  };
  for (const auto& g : girth4) removal_check(g);
  for (const auto& g : snarks) removal_check(g);

  // One of the two reductions of each 4-cycle stays cyclically 4-connected.
  auto keeps = [](const CubicGraph& red) {
    if (!red.is_simple()) return false;
    if (red.order() <= 12) return !oracle::brute_force_cyclic_cut(red, 4).has_value();
    return is_cyclically_k_connected(red, 4);
  };
  auto reduction_check = [&](const CubicGraph& g) {
    if (g.order() < 10 || !is_cyclically_k_connected(g, 4)) return;
    for (const auto& z : four_cycles(g)) {
      const auto pairs = opposite_pairs(g, z);
      const bool a = keeps(reduction(g, pairs[0])), b = keeps(reduction(g, pairs[1]));
      r.expect(a || b, "neither reduction of a 4-cycle is cyclically 4-connected");
      r.expect(a == reduction_keeps_cyclic4(g, pairs[0]) && b == reduction_keeps_cyclic4(g, pairs[1]),
               "reduction_keeps_cyclic4 disagrees with direct check");
      ++count["reduction connectivity"];
    }
  };
  for (const auto& g : girth4) reduction_check(g);
  for (const auto& g : snarks) reduction_check(g);

  // Colourability of the four doublings and the marking.
  for (const auto& g : snarks) {
    if (g.order() > 22) continue;
    const auto marked = mark_undoublable_edges(g);
    const std::set<EdgeId> m(marked.begin(), marked.end());
    for (EdgeId e = 0; e < g.size(); ++e) {
      std::set<bool> colourable;
      for (const auto& path : paths_through(g, e)) {
        const auto d = edge_doubling(g, path).graph;
        colourable.insert(oracle::edge_colourable(d));
        r.expect(girth(d) == 4 && is_cyclically_k_connected(d, 4) && !is_cyclically_k_connected(d, 5),
                 "doubling without girth and cyclic connectivity exactly 4");
      }
      r.expect(colourable.size() == 1, "the four doublings disagree on colourability");
      ++count["four doublings"];
      r.expect(*colourable.begin() == (m.count(e) == 1), "marking disagrees with direct colouring");
      ++count["marking"];
    }
  }

  // Doubling equivalence and isomorphic results with matching pairs.
  for (const auto& g : girth4) {
    if (g.order() > 12) continue;
    const auto classes = doubling_equivalence_classes(g);
    struct Child {
      int cls;
      DoublingResult d;
      CanonicalForm cf;
      std::vector<Permutation> auts;
    };
    std::vector<Child> kids;
    for (size_t k = 0; k < classes.size(); ++k)
      for (const auto& p : classes[k]) {
        auto d = edge_doubling(g, p);
        auto cf = canonical_form(d.graph);
        auto auts = oracle::all_automorphisms(d.graph);
        kids.push_back({static_cast<int>(k), std::move(d), std::move(cf), std::move(auts)});
      }
    for (size_t i = 0; i < kids.size(); ++i)
      for (size_t j = i + 1; j < kids.size(); ++j) {
        const Child &a = kids[i], &b = kids[j];
        bool iso = false;
        if (a.cf.encoding == b.cf.encoding) {
          const int n = a.d.graph.order();
          Permutation inv_b(n);
          for (Vertex v = 0; v < n; ++v) inv_b[b.cf.labelling[v]] = v;
          const VertexPairs target = as_set(b.d.graph, b.d.reduction_pair);
          for (const auto& aut : a.auts) {
            Permutation map(n);
            for (Vertex v = 0; v < n; ++v) map[v] = inv_b[a.cf.labelling[aut[v]]];
            if (as_set(a.d.graph, a.d.reduction_pair, &map) == target) {
              iso = true;
              break;
            }
          }
        }
        r.expect(iso == (a.cls == b.cls), "doubling equivalence disagrees with isomorphism of results");
        ++count["doubling equivalence"];
      }
  }

  // Strong criterion against per-edge reductions.
  for (const auto& g : snarks) {
    bool all_class_two = true;
    for (EdgeId e = 0; e < g.size(); ++e) {
      all_class_two &= !oracle::edge_colourable(edge_reduction(g, e));
      ++count["strong criterion (edge reductions)"];
    }
    r.expect(is_strong_snark(g) == all_class_two, "strong criterion disagrees with edge reductions");
  }

  // Reductions of strong girth 4 snarks.
  long strong_g4 = 0;
  for (int n = 22; n <= c.max_n; n += 2)
    for (const auto& g : c.pipe.g4(n)) {
      if (!is_strong_snark(g)) continue;
      ++strong_g4;
      for (const auto& red : valid_reductions(g)) r.expect(is_strong_snark(red), "reduction lost strongness");
    }
  if (strong_g4 == 0) r.note("strong reductions vacuous: no strong girth 4 snark up to " + str(c.max_n));

  for (const auto& [name, k] : count) {
    r.note(name + " " + str(k));
    r.expect(k >= 500, name + ": only " + str(k) + " instances");
  }
}

// 9. Differential tests.
void differential(Context& c, Report& r) {
  for (int n = 10; n <= std::min(24, c.max_n); n += 2) {
    MinisnarkOptions base;
    base.n = n;
    const auto ref = run_encoded(base);
    r.expect(ref.size() == c.pipe.proper(n).size(), "n=" + str(n) + ": count differs from the pipeline");
    for (int which = 0; which < 3; ++which) {
      MinisnarkOptions o = base;
      if (which != 1) o.speedup_a = false;
      if (which != 0) o.speedup_b = false;
      r.expect(run_encoded(o) == ref, "n=" + str(n) + ": speedup variant " + str(which) + " differs");
    }
  }
  for (int n = 10; n <= std::min(22, c.max_n); n += 2) {
    MinisnarkOptions base;
    base.n = n;
    const auto ref = run_encoded(base);
    for (int mod : {2, 3, 5}) {
      std::vector<std::string> all;
      for (int res = 0; res < mod; ++res) {
        MinisnarkOptions o = base;
        o.mod = mod;
        o.res = res;
        const auto part = run_encoded(o);
        all.insert(all.end(), part.begin(), part.end());
      }
      std::sort(all.begin(), all.end());
      std::vector<std::string> sorted_ref = ref;
      std::sort(sorted_ref.begin(), sorted_ref.end());
      r.expect(std::adjacent_find(all.begin(), all.end()) == all.end(),
               "n=" + str(n) + " mod " + str(mod) + ": parts overlap");
      r.expect(all == sorted_ref, "n=" + str(n) + " mod " + str(mod) + ": parts are incomplete");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string dir = "snark-data";
  int max_n = 28, naive_max = 20, threads = 1;
  std::vector<int> only;
  app.add_option("--dir", dir, "pipeline cache directory");
  app.add_option("--max-n", max_n, "largest level")->check(CLI::Range(10, 28));
  app.add_option("--naive-max", naive_max, "largest n for the naive minisnark oracle");
  app.add_option("--threads", threads);
  app.add_option("--only", only, "criteria to run (default all)");
  CLI11_PARSE(app, argc, argv);

  PipelineOptions po;
  po.dir = dir;
  po.threads = threads;
  po.log = &std::cerr;
  Pipeline pipe(po);
  Context ctx{pipe, max_n};

  const std::vector<std::pair<std::string, std::function<void(Report&)>>> criteria = {
      {"proper snark counts", [&](Report& r) { proper_counts(ctx, r); }},
      {"girth 4 snark counts", [&](Report& r) { g4_counts(ctx, r); }},
      {"girth 6 snarks", [&](Report& r) { girth_six(ctx, r); }},
      {"cyclically 5-connected counts", [&](Report& r) { cyclic5(ctx, r); }},
      {"no strong snarks", [&](Report& r) { strong(ctx, r); }},
      {"canonical 2-factor types", [&](Report& r) { types(ctx, r); }},
      {"oracle equivalence", [&](Report& r) { oracles(ctx, r, naive_max); }},
      {"structural properties", [&](Report& r) { properties(ctx, r); }},
      {"differential tests", [&](Report& r) { differential(ctx, r); }},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Report r;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(r);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = r.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << " (" << fmt_seconds(since(t0));
    for (const auto& n : r.notes) std::cout << "; " << n;
    std::cout << ")" << std::endl;
    for (size_t k = 0; k < std::min<size_t>(r.failures.size(), 10); ++k)
      std::cout << "  " << r.failures[k] << std::endl;
    if (r.failures.size() > 10) std::cout << "  ... " << r.failures.size() - 10 << " more" << std::endl;
  }
  return failed ? 1 : 0;
}
