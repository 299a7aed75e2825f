#include "snark/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "snark/canonical.hpp"
#include "snark/graph6.hpp"
#include "snark/minisnark.hpp"
#include "snark/strong.hpp"
#include "snark/tetration.hpp"

namespace snark {

namespace fs = std::filesystem;

uint64_t encoding_checksum(const std::vector<CubicGraph>& graphs) {
  std::vector<std::string> enc;
  enc.reserve(graphs.size());
  for (const auto& g : graphs) enc.push_back(canonical_encoding(g));
  std::sort(enc.begin(), enc.end());
  uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& s : enc) {
    for (unsigned char c : s) feed(c);
    feed('\n');
  }
  return h;
}

std::string checksum_hex(uint64_t sum) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(sum));
  return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string type_string(const FactorType& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s;
}

FactorType parse_type(const std::string& line) {
  FactorType t;
  std::stringstream ss(line);
  std::string part;
  while (std::getline(ss, part, ',')) t.push_back(std::stoi(part));
  return t;
}

std::string key(const char* kind, int n) { return std::string(kind) + "_n" + std::to_string(n); }

}  // namespace

Pipeline::Pipeline(PipelineOptions opt) : opt_(std::move(opt)) {
  fs::create_directories(opt_.dir);
  load_manifest();
}

std::string Pipeline::path(const std::string& k, const char* ext) const {
  return (fs::path(opt_.dir) / (k + ext)).string();
}

void Pipeline::load_manifest() {
  const std::string p = path("manifest", ".json");
  if (!fs::exists(p)) return;
  std::ifstream in(p);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw PipelineError("unreadable manifest " + p + ": " + e.what());
  }
  for (const auto& [k, v] : j.items()) {
    LevelRecord r;
    r.count = v.at("count").get<long>();
    r.checksum = std::stoull(v.at("checksum").get<std::string>(), nullptr, 16);
    r.seconds = v.value("seconds", 0.0);
    manifest_[k] = r;
  }
}

void Pipeline::save_manifest() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, r] : manifest_)
    j[k] = {{"count", r.count}, {"checksum", checksum_hex(r.checksum)}, {"seconds", r.seconds}};
  const std::string p = path("manifest", ".json");
  const std::string tmp = p + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(2) << "\n";
    if (!out) throw PipelineError("cannot write " + tmp);
  }
  fs::rename(tmp, p);
}

void Pipeline::note(const std::string& line) const {
  if (opt_.log) *opt_.log << line << std::endl;
}

void Pipeline::stat_line(int n, const std::string& what, long count, double seconds) const {
  if (!opt_.stats) return;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  *opt_.stats << "n=" << n << " type=" << what << " count=" << count << " seconds=" << buf << std::endl;
}

Pipeline::Level& Pipeline::level(const std::string& k, const std::function<Level()>& make, bool with_types) {
  if (auto it = levels_.find(k); it != levels_.end()) return it->second;
  const std::string g6 = path(k, ".g6"), tp = path(k, ".types");
  auto entry = manifest_.find(k);
  if (entry != manifest_.end() && fs::exists(g6) && (!with_types || fs::exists(tp))) {
    Level lv;
    lv.graphs = read_graph6_file(g6);
    const uint64_t sum = encoding_checksum(lv.graphs);
    if (static_cast<long>(lv.graphs.size()) != entry->second.count || sum != entry->second.checksum)
      throw PipelineError("checksum mismatch for " + g6 + ": manifest has " + std::to_string(entry->second.count) +
                          " graphs / " + checksum_hex(entry->second.checksum) + ", file has " +
                          std::to_string(lv.graphs.size()) + " / " + checksum_hex(sum));
    if (with_types) {
      std::ifstream in(tp);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) lv.types.push_back(parse_type(line));
      if (lv.types.size() != lv.graphs.size()) throw PipelineError("type list does not match " + g6);
    }
    note("loaded " + k + " (" + std::to_string(lv.graphs.size()) + ")");
    return levels_[k] = std::move(lv);
  }
  note("computing " + k);
  const auto t0 = Clock::now();
  Level lv = make();
  const double sec = since(t0);
  {
    std::ofstream out(g6);
    for (const auto& g : lv.graphs) write_graph6(out, g);
    if (!out) throw PipelineError("cannot write " + g6);
  }
  if (with_types) {
    std::ofstream out(tp);
    for (const auto& t : lv.types) out << type_string(t) << "\n";
    if (!out) throw PipelineError("cannot write " + tp);
  }
  manifest_[k] = {static_cast<long>(lv.graphs.size()), encoding_checksum(lv.graphs), sec};
  save_manifest();
  ++computed_;
  note("wrote " + k + " (" + std::to_string(lv.graphs.size()) + ", " + std::to_string(sec) + " s)");
  return levels_[k] = std::move(lv);
}

const std::vector<CubicGraph>& Pipeline::proper(int n) {
  return level(key("proper_g5", n), [&] {
    Level lv;
    const auto t_level = Clock::now();
    for (const auto& type : enumerate_types(n, 5)) {
      MinisnarkOptions o;
      o.n = n;
      o.threads = opt_.threads;
      o.only_types = {type};
      const auto t0 = Clock::now();
      long count = 0;
      run_minisnark(o, [&](const Emission& e) {
        lv.graphs.push_back(e.graph);
        lv.types.push_back(e.type);
        ++count;
      });
      if (count) stat_line(n, type_string(type), count, since(t0));
    }
    stat_line(n, "proper", static_cast<long>(lv.graphs.size()), since(t_level));
    return lv;
  }, true).graphs;
}

const std::vector<FactorType>& Pipeline::proper_types(int n) {
  proper(n);
  return levels_.at(key("proper_g5", n)).types;
}

const std::vector<CubicGraph>& Pipeline::g4(int n) {
  return level(key("g4", n), [&] {
    Level lv;
    if (n < 12) return lv;
    const auto parents = snarks(n - 2);
    const auto t0 = Clock::now();
    lv.graphs = generate_g4(parents, nullptr, opt_.threads);
    stat_line(n, "g4", static_cast<long>(lv.graphs.size()), since(t0));
    return lv;
  }).graphs;
}

std::vector<CubicGraph> Pipeline::snarks(int n) {
  std::vector<CubicGraph> all = proper(n);
  const auto& extra = g4(n);
  all.insert(all.end(), extra.begin(), extra.end());
  return all;
}

const std::vector<CubicGraph>& Pipeline::strong_mode(int n) {
  return level(key("strong_mode", n), [&] {
    Level lv;
    MinisnarkOptions o;
    o.n = n;
    o.strong = true;
    o.threads = opt_.threads;
    const auto t0 = Clock::now();
    run_minisnark(o, [&](const Emission& e) { lv.graphs.push_back(e.graph); });
    stat_line(n, "strong-mode", static_cast<long>(lv.graphs.size()), since(t0));
    return lv;
  }).graphs;
}

const std::vector<CubicGraph>& Pipeline::strong_filtered(int n) {
  return level(key("strong_filter", n), [&] {
    Level lv;
    const auto all = snarks(n);
    const auto t0 = Clock::now();
    lv.graphs = filter_strong(all).strong;
    stat_line(n, "strong-filter", static_cast<long>(lv.graphs.size()), since(t0));
    return lv;
  }).graphs;
}

const std::vector<CubicGraph>& Pipeline::strong_inserted(int n) {
  return level(key("strong_insert", n), [&] {
    Level lv;
    if (n < 12) return lv;
    const auto parents = snarks(n - 2);
    const auto t0 = Clock::now();
    lv.graphs = generate_strong_by_insertion(parents);
    stat_line(n, "strong-insert", static_cast<long>(lv.graphs.size()), since(t0));
    return lv;
  }).graphs;
}

void Pipeline::run(int n, bool strong) {
  for (int m = 10; m <= n; m += 2) {
    proper(m);
    g4(m);
    if (strong) {
      strong_filtered(m);
      strong_mode(m);
      strong_inserted(m);
    }
  }
}

}  // namespace snark
