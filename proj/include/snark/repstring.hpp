#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "snark/factors.hpp"
#include "snark/graph.hpp"

namespace snark {

inline constexpr int kUndefined = -1;
inline constexpr int kMaxCycles = 22;  // cycles of length >= 3 on <= 64 vertices

/// vertex -> label (0-based). Labels of each cycle are consecutive along the
/// cycle and cycles occupy the blocks of the factor type in order.
struct LegalLabelling {
  std::vector<int> label;
};

/// Builds a legal labelling: `order[b]` is the cycle placed in block b,
/// `start[c]` the index within cycle c that gets the block's first label,
/// `dir[c]` is +1 or -1.
LegalLabelling make_labelling(const TwoFactor& f, const std::vector<int>& order,
                              const std::vector<int>& start, const std::vector<int>& dir);
bool is_legal(const TwoFactor& f, const LegalLabelling& l);

/// All legal labellings of f (orderings of equal-length cycles, starts and
/// directions). Exponential; meant for small cases and oracles.
std::vector<LegalLabelling> all_legal_labellings(const TwoFactor& f);

struct RepString {
  std::vector<int> s1;
  std::vector<int> s2;  // label of the non-factor neighbour, or kUndefined

  int frontier() const;  // first undefined position of s2, or s2.size()
  std::vector<int> joined() const;  // s1 followed by s2
};

/// (S1, S2) of g for factor f and labelling l. Vertices of degree 2 give
/// undefined entries. Throws if l is not legal for f.
RepString s2_of(const CubicGraph& g, const TwoFactor& f, const LegalLabelling& l);

// ---------------------------------------------------------------------------
// Incremental labelling search. A state is a partially assigned legal
// labelling of one factor together with the first position of S2 not yet
// compared against the reference string.

struct BlockLayout {
  int n = 0;
  int blocks = 0;
  std::array<int8_t, kMaxCycles> start{};
  std::array<int8_t, kMaxCycles> len{};
  std::array<int8_t, kMaxVertices> block_of{};

  static BlockLayout of(const FactorType& type);
};

struct LabelFactor {
  int cycles = 0;
  std::array<int8_t, kMaxCycles> len{};
  std::array<int8_t, kMaxCycles> first{};
  std::array<int8_t, kMaxVertices> verts{};
  std::array<int8_t, kMaxVertices> cyc_of{};
  std::array<int8_t, kMaxVertices> pos_of{};
  // Non-factor neighbour for vertices that had degree 3 when the factor was
  // recorded, else kUndefined (then the vertex's later third edge is used).
  std::array<int8_t, kMaxVertices> cross{};

  static LabelFactor of(const CubicGraph& g, const TwoFactor& f);
};

struct LabelState {
  int32_t factor = 0;
  int8_t p = 0;
  std::array<int8_t, kMaxCycles> cyc_block;
  std::array<int8_t, kMaxCycles> cyc_start;
  std::array<int8_t, kMaxCycles> cyc_dir;
  std::array<int8_t, kMaxCycles> block_cycle;

  static LabelState fresh(int32_t factor) {
    LabelState s;
    s.factor = factor;
    s.cyc_block.fill(-1);
    s.cyc_start.fill(0);
    s.cyc_dir.fill(1);
    s.block_cycle.fill(-1);
    return s;
  }
};

namespace detail {

inline int mod(int a, int m) {
  a %= m;
  return a < 0 ? a + m : a;
}

inline int label_of(const BlockLayout& lay, const LabelFactor& f, const LabelState& s, int u) {
  const int c = f.cyc_of[u];
  const int off = mod((f.pos_of[u] - s.cyc_start[c]) * s.cyc_dir[c], f.len[c]);
  return lay.start[s.cyc_block[c]] + off;
}

inline int vertex_at(const BlockLayout& lay, const LabelFactor& f, const LabelState& s, int p) {
  const int b = lay.block_of[p];
  const int c = s.block_cycle[b];
  const int idx = mod(s.cyc_start[c] + s.cyc_dir[c] * (p - lay.start[b]), f.len[c]);
  return f.verts[f.first[c] + idx];
}

inline void assign(LabelState& s, int c, int b, int start, int dir) {
  s.cyc_block[c] = static_cast<int8_t>(b);
  s.block_cycle[b] = static_cast<int8_t>(c);
  s.cyc_start[c] = static_cast<int8_t>(start);
  s.cyc_dir[c] = static_cast<int8_t>(dir);
}

std::vector<LabelState>& scratch();

}  // namespace detail

/// Pushes `s` and all labellings branching from it forward, comparing
/// S2 of the factor with `ref` (the reference S2). `partner[x]` is the third
/// neighbour of x in the current graph or kUndefined. Returns true as soon as
/// some labelling has a complete prefix smaller than the reference. Otherwise
/// every labelling either is discarded (larger), runs to the end (equal), or
/// stops at an undefined entry and is handed to `wait(state, vertex)` with the
/// degree-2 vertex it waits for.
template <class Wait>
bool advance_labellings(const BlockLayout& lay, const LabelFactor& f, const int8_t* partner,
                        const int8_t* ref, const LabelState& initial, Wait&& wait) {
  using detail::assign;
  auto& stack = detail::scratch();
  const size_t base = stack.size();
  stack.push_back(initial);
  bool smaller = false;
  while (stack.size() > base) {
    LabelState s = stack.back();
    stack.pop_back();
    while (true) {
      const int p = s.p;
      if (p == lay.n) break;  // equal string
      const int b = lay.block_of[p];
      if (s.block_cycle[b] < 0) {
        // Place any unassigned cycle of the right length here.
        const int l = lay.len[b];
        bool first = true;
        LabelState keep;
        for (int c = 0; c < f.cycles; ++c) {
          if (s.cyc_block[c] >= 0 || f.len[c] != l) continue;
          for (int st = 0; st < l; ++st)
            for (int dir : {1, -1}) {
              LabelState t = s;
              assign(t, c, b, st, dir);
              if (first) {
                keep = t;
                first = false;
              } else {
                stack.push_back(t);
              }
            }
        }
        if (first) break;  // cannot happen for matching types
        s = keep;
        continue;
      }
      const int x = detail::vertex_at(lay, f, s, p);
      const int u = f.cross[x] >= 0 ? f.cross[x] : partner[x];
      if (u < 0) {
        wait(s, x);
        break;
      }
      const int r = ref[p];
      if (r < 0) {
        wait(s, p);
        break;
      }
      const int cu = f.cyc_of[u];
      if (s.cyc_block[cu] >= 0) {
        const int lu = detail::label_of(lay, f, s, u);
        if (lu < r) {
          smaller = true;
          break;
        }
        if (lu > r) break;
        ++s.p;
        continue;
      }
      // u's cycle is free: its smallest possible label starts the earliest
      // free block of that length.
      int bu = -1;
      for (int k = 0; k < lay.blocks; ++k)
        if (s.block_cycle[k] < 0 && lay.len[k] == f.len[cu]) {
          bu = k;
          break;
        }
      const int lu = lay.start[bu];
      if (lu < r) {
        smaller = true;
        break;
      }
      if (lu > r) break;
      LabelState t = s;
      assign(t, cu, bu, f.pos_of[u], -1);
      ++t.p;
      stack.push_back(t);
      assign(s, cu, bu, f.pos_of[u], 1);
      ++s.p;
    }
    if (smaller) break;
  }
  stack.resize(base);
  return smaller;
}

enum class PrefixVerdict { kSmaller, kNotSmaller };

struct PrefixResult {
  PrefixVerdict verdict = PrefixVerdict::kNotSmaller;
  // Labellings still equal up to an undefined entry, with the position to
  // resume from. Empty when the verdict is kSmaller.
  std::vector<LabelState> resume;
};

/// Compares every legal labelling of `f` (same S1 as the reference) with the
/// reference string on the current, possibly incomplete, graph.
PrefixResult beats_prefix(const CubicGraph& g, const TwoFactor& f, const RepString& reference);

}  // namespace snark
