#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "snark/factors.hpp"
#include "snark/graph.hpp"

namespace snark {

class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// FNV-1a 64 over the sorted canonical encodings, each followed by '\n'.
/// Independent of the order and labelling of the input.
uint64_t encoding_checksum(const std::vector<CubicGraph>& graphs);
std::string checksum_hex(uint64_t sum);

struct PipelineOptions {
  std::string dir = "snark-data";
  int threads = 1;
  std::ostream* stats = nullptr;  // one line per (level, type or g4, count, seconds)
  std::ostream* log = nullptr;    // progress notes
};

struct LevelRecord {
  long count = 0;
  uint64_t checksum = 0;
  double seconds = 0;
};

/// Level-by-level generation with every list persisted under `dir` as
/// graph6 plus a manifest of counts and checksums. A list already on disk
/// is reused if it matches its manifest entry; a mismatch is an error.
class Pipeline {
 public:
  explicit Pipeline(PipelineOptions opt);

  /// Snarks with girth >= 5 (minisnark).
  const std::vector<CubicGraph>& proper(int n);
  /// Type of the canonical 2-factor of each graph in proper(n).
  const std::vector<FactorType>& proper_types(int n);
  /// Snarks with girth 4 (tetration of all snarks on n - 2).
  const std::vector<CubicGraph>& g4(int n);
  /// proper(n) followed by g4(n).
  std::vector<CubicGraph> snarks(int n);

  /// Minisnark output in strong mode.
  const std::vector<CubicGraph>& strong_mode(int n);
  /// Strong members of snarks(n).
  const std::vector<CubicGraph>& strong_filtered(int n);
  /// Strong snarks built by edge insertion from snarks(n - 2).
  const std::vector<CubicGraph>& strong_inserted(int n);

  /// Builds every proper and g4 list up to n; with `strong` also the three
  /// strong lists per level.
  void run(int n, bool strong);

  const std::map<std::string, LevelRecord>& manifest() const { return manifest_; }
  /// Number of lists computed (not loaded) by this object.
  int computed() const { return computed_; }

 private:
  struct Level {
    std::vector<CubicGraph> graphs;
    std::vector<FactorType> types;
  };

  Level& level(const std::string& key, const std::function<Level()>& make, bool with_types = false);
  std::string path(const std::string& key, const char* ext) const;
  void load_manifest();
  void save_manifest() const;
  void note(const std::string& line) const;
  void stat_line(int n, const std::string& what, long count, double seconds) const;

  PipelineOptions opt_;
  std::map<std::string, LevelRecord> manifest_;
  std::map<std::string, Level> levels_;
  int computed_ = 0;
};

}  // namespace snark
