// snarkgen: command line front end for the generators and filters.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "snark/canonical.hpp"
#include "snark/graph6.hpp"
#include "snark/minisnark.hpp"
#include "snark/pipeline.hpp"
#include "snark/strong.hpp"
#include "snark/tetration.hpp"

using namespace snark;

namespace {

// Output file or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }
  void check(const std::string& what) {
    out().flush();
    if (!out()) throw std::runtime_error("write failed: " + what);
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<CubicGraph> read_input(const std::string& path) {
  if (path == "-") return read_graph6(std::cin);
  if (!std::ifstream(path)) throw std::runtime_error("cannot open " + path);
  return read_graph6_file(path);
}

std::set<std::string> encodings(const std::vector<CubicGraph>& gs) {
  std::set<std::string> s;
  for (const auto& g : gs) s.insert(canonical_encoding(g));
  return s;
}

std::string join(const FactorType& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generation of snarks and strong snarks"};
  app.require_subcommand(1);

  // proper
  MinisnarkOptions mo;
  std::string out_path, stats_path;
  bool count_only = false, no_a = false, no_b = false;
  auto* proper = app.add_subcommand("proper", "snarks with girth >= g by orderly generation");
  proper->add_option("--n", mo.n, "number of vertices")->required();
  proper->add_option("--girth", mo.girth, "minimum girth (>= 4)")->check(CLI::Range(4, 64));
  proper->add_flag("--strong", mo.strong, "strong mode");
  proper->add_option("--mod", mo.mod, "number of parts")->check(CLI::PositiveNumber);
  proper->add_option("--res", mo.res, "part to generate");
  proper->add_option("--split-depth", mo.split_depth, "depth at which parts are dealt out");
  proper->add_option("--threads", mo.threads)->check(CLI::PositiveNumber);
  proper->add_flag("--no-speedup-a", no_a, "canonicity test on the last edges too");
  proper->add_flag("--no-speedup-b", no_b, "recompute labellings instead of resuming");
  proper->add_flag("--count-only", count_only, "print the count only");
  proper->add_option("-o,--output", out_path, "graph6 output (default stdout)");
  proper->add_option("--stats", stats_path, "per-type counts");

  // g4
  std::string in_path;
  int g4_threads = 1;
  auto* g4 = app.add_subcommand("g4", "girth-4 snarks on n+2 vertices from all snarks on n");
  g4->add_option("-i,--input", in_path, "graph6 list of every snark on n vertices")->required();
  g4->add_option("-o,--output", out_path);
  g4->add_option("--threads", g4_threads)->check(CLI::PositiveNumber);
  g4->add_flag("--count-only", count_only);
  g4->add_option("--stats", stats_path);

  // filter-strong
  std::string witness_path;
  auto* fstrong = app.add_subcommand("filter-strong", "keep the strong snarks of a list");
  fstrong->add_option("-i,--input", in_path)->required();
  fstrong->add_option("-o,--output", out_path);
  fstrong->add_option("--witnesses", witness_path, "text dump of rejection witnesses");

  // gen-strong-insert
  auto* gsi = app.add_subcommand("gen-strong-insert", "strong snarks on n+2 by edge insertion into snarks on n");
  gsi->add_option("-i,--input", in_path)->required();
  gsi->add_option("-o,--output", out_path);

  // pipeline
  PipelineOptions po;
  int target = 0;
  bool strong_pipe = false;
  auto* pipe = app.add_subcommand("pipeline", "all proper and g4 lists up to n, persisted and resumable");
  pipe->add_option("--n", target)->required();
  pipe->add_option("--dir", po.dir, "data directory");
  pipe->add_option("--threads", po.threads)->check(CLI::PositiveNumber);
  pipe->add_flag("--strong", strong_pipe, "also build the strong lists");
  pipe->add_option("--stats", stats_path);

  // verify
  int verify_n = 18, verify_g4_n = 22;
  auto* verify = app.add_subcommand("verify", "cross-check the generators against the naive oracles");
  verify->add_option("--n", verify_n, "minisnark vs naive for 10..n");
  verify->add_option("--g4-n", verify_g4_n, "tetration vs naive doubling for 12..n");

  CLI11_PARSE(app, argc, argv);

  try {
    std::unique_ptr<std::ofstream> stats_file;
    std::ostream* stats = &std::cerr;
    if (!stats_path.empty()) {
      stats_file = std::make_unique<std::ofstream>(stats_path);
      if (!*stats_file) throw std::runtime_error("cannot open " + stats_path);
      stats = stats_file.get();
    }

    if (*proper) {
      if (mo.res < 0 || mo.res >= mo.mod) throw std::runtime_error("need 0 <= res < mod");
      mo.speedup_a = !no_a;
      mo.speedup_b = !no_b;
      Sink sink(count_only ? "" : out_path);
      const auto t0 = std::chrono::steady_clock::now();
      const auto st = run_minisnark(mo, [&](const Emission& e) {
        if (!count_only) write_graph6(sink.out(), e.graph);
      });
      sink.check("output");
      const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (const auto& [type, c] : st.per_type)
        if (c) *stats << "n=" << mo.n << " type=" << join(type) << " count=" << c << "\n";
      std::cerr << "count " << st.emitted << " (" << sec << " s)\n";
      if (count_only) std::cout << st.emitted << "\n";
    } else if (*g4) {
      const auto parents = read_input(in_path);
      Sink sink(count_only ? "" : out_path);
      const auto t0 = std::chrono::steady_clock::now();
      const auto st = generate_g4_level(parents, [&](const CubicGraph& g) {
        if (!count_only) write_graph6(sink.out(), g);
      }, g4_threads);
      sink.check("output");
      const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      *stats << "parents=" << st.parents << " classes=" << st.classes << " doubled=" << st.doubled
             << " type=g4 count=" << st.accepted << " seconds=" << sec << "\n";
      std::cerr << "count " << st.accepted << "\n";
      if (count_only) std::cout << st.accepted << "\n";
    } else if (*fstrong) {
      const auto list = read_input(in_path);
      const auto res = filter_strong(list);
      Sink sink(out_path);
      for (const auto& g : res.strong) write_graph6(sink.out(), g);
      sink.check("output");
      if (!witness_path.empty()) {
        Sink w(witness_path);
        for (size_t i = 0; i < list.size(); ++i)
          if (res.verdicts[i].witness)
            w.out() << i << " " << to_graph6(list[i]) << "\n  "
                    << describe_witness(list[i], *res.verdicts[i].witness) << "\n";
        w.check("witnesses");
      }
      std::cerr << "strong " << res.strong.size() << " of " << list.size() << "\n";
    } else if (*gsi) {
      const auto out = generate_strong_by_insertion(read_input(in_path));
      Sink sink(out_path);
      for (const auto& g : out) write_graph6(sink.out(), g);
      sink.check("output");
      std::cerr << "count " << out.size() << "\n";
    } else if (*pipe) {
      po.stats = stats;
      po.log = &std::cerr;
      Pipeline p(po);
      p.run(target, strong_pipe);
      for (int n = 10; n <= target; n += 2) {
        std::cerr << "n=" << n << " proper=" << p.proper(n).size() << " g4=" << p.g4(n).size();
        if (strong_pipe)
          std::cerr << " strong-filter=" << p.strong_filtered(n).size()
                    << " strong-mode=" << p.strong_mode(n).size()
                    << " strong-insert=" << p.strong_inserted(n).size();
        std::cerr << "\n";
      }
    } else if (*verify) {
      bool ok = true;
      for (int n = 10; n <= verify_n; n += 2) {
        MinisnarkOptions o;
        o.n = n;
        std::vector<CubicGraph> gen;
        for (auto& e : generate_proper(o)) gen.push_back(e.graph);
        const bool same = encodings(gen) == encodings(oracle::naive_proper_snarks(n)) &&
                          encodings(gen).size() == gen.size();
        std::cout << "minisnark n=" << n << " count=" << gen.size() << (same ? " ok" : " MISMATCH") << "\n";
        ok &= same;
      }
      Pipeline p(PipelineOptions{});
      for (int n = 12; n <= verify_g4_n; n += 2) {
        const auto parents = p.snarks(n - 2);
        const bool same = verify_level_isomorph_free(p.g4(n), parents);
        std::cout << "tetration n=" << n << " count=" << p.g4(n).size() << (same ? " ok" : " MISMATCH") << "\n";
        ok &= same;
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
