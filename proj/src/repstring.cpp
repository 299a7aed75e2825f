#include "snark/repstring.hpp"

#include <algorithm>
#include <numeric>

namespace snark {

namespace detail {

std::vector<LabelState>& scratch() {
  thread_local std::vector<LabelState> stack;
  return stack;
}

}  // namespace detail

namespace {

std::vector<int> block_starts(const FactorType& type) {
  std::vector<int> out(type.size());
  int at = 0;
  for (size_t b = 0; b < type.size(); ++b) {
    out[b] = at;
    at += type[b];
  }
  return out;
}

}  // namespace

LegalLabelling make_labelling(const TwoFactor& f, const std::vector<int>& order,
                              const std::vector<int>& start, const std::vector<int>& dir) {
  const FactorType type = f.type();
  const int k = static_cast<int>(f.cycles.size());
  if (static_cast<int>(order.size()) != k || static_cast<int>(start.size()) != k ||
      static_cast<int>(dir.size()) != k)
    throw GraphError("make_labelling: one entry per cycle expected");
  int n = 0;
  for (const auto& c : f.cycles) n += static_cast<int>(c.size());
  LegalLabelling l;
  l.label.assign(n, -1);
  const auto starts = block_starts(type);
  for (int b = 0; b < k; ++b) {
    const auto& cyc = f.cycles[order[b]];
    const int len = static_cast<int>(cyc.size());
    if (len != type[b]) throw GraphError("make_labelling: cycle does not fit its block");
    for (int i = 0; i < len; ++i) {
      const int idx = detail::mod(start[order[b]] + dir[order[b]] * i, len);
      l.label[cyc[idx]] = starts[b] + i;
    }
  }
  return l;
}

bool is_legal(const TwoFactor& f, const LegalLabelling& l) {
  const FactorType type = f.type();
  int n = 0;
  for (const auto& c : f.cycles) n += static_cast<int>(c.size());
  if (static_cast<int>(l.label.size()) != n) return false;
  std::vector<int> at(n, -1);
  for (int v = 0; v < n; ++v) {
    if (l.label[v] < 0 || l.label[v] >= n || at[l.label[v]] >= 0) return false;
    at[l.label[v]] = v;
  }
  // Cycle id and factor neighbours of each vertex.
  std::vector<int> cyc(n);
  std::vector<std::array<int, 2>> nb(n);
  for (size_t c = 0; c < f.cycles.size(); ++c) {
    const auto& cy = f.cycles[c];
    for (size_t i = 0; i < cy.size(); ++i) {
      cyc[cy[i]] = static_cast<int>(c);
      nb[cy[i]] = {cy[(i + 1) % cy.size()], cy[(i + cy.size() - 1) % cy.size()]};
    }
  }
  const auto starts = block_starts(type);
  for (size_t b = 0; b < type.size(); ++b) {
    const int s = starts[b], len = type[b];
    const int c0 = cyc[at[s]];
    if (static_cast<int>(f.cycles[c0].size()) != len) return false;
    for (int i = 0; i < len; ++i) {
      const int x = at[s + i], y = at[s + (i + 1) % len];
      if (cyc[x] != c0) return false;
      if (nb[x][0] != y && nb[x][1] != y) return false;
    }
  }
  return true;
}

std::vector<LegalLabelling> all_legal_labellings(const TwoFactor& f) {
  const FactorType type = f.type();
  const int k = static_cast<int>(f.cycles.size());
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<LegalLabelling> out;
  // Permutations of cycles that respect the block lengths.
  std::sort(order.begin(), order.end());
  do {
    bool fits = true;
    for (int b = 0; b < k && fits; ++b) fits = static_cast<int>(f.cycles[order[b]].size()) == type[b];
    if (!fits) continue;
    std::vector<int> start(k, 0), dir(k, 1);
    while (true) {
      out.push_back(make_labelling(f, order, start, dir));
      int c = 0;
      for (; c < k; ++c) {
        if (dir[c] == 1) {
          dir[c] = -1;
          break;
        }
        dir[c] = 1;
        if (++start[c] < static_cast<int>(f.cycles[c].size())) break;
        start[c] = 0;
      }
      if (c == k) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

int RepString::frontier() const {
  const auto it = std::find(s2.begin(), s2.end(), kUndefined);
  return static_cast<int>(it - s2.begin());
}

std::vector<int> RepString::joined() const {
  std::vector<int> out = s1;
  out.insert(out.end(), s2.begin(), s2.end());
  return out;
}

RepString s2_of(const CubicGraph& g, const TwoFactor& f, const LegalLabelling& l) {
  if (!is_legal(f, l)) throw GraphError("s2_of: labelling is not legal");
  const int n = g.order();
  if (static_cast<int>(l.label.size()) != n) throw GraphError("s2_of: size mismatch");
  RepString out;
  out.s1 = s1_of(f);
  out.s2.assign(n, kUndefined);
  std::vector<std::array<int, 2>> nb(n);
  for (const auto& cy : f.cycles)
    for (size_t i = 0; i < cy.size(); ++i)
      nb[cy[i]] = {cy[(i + 1) % cy.size()], cy[(i + cy.size() - 1) % cy.size()]};
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) < 3) continue;
    for (int i = 0; i < 3; ++i) {
      const Vertex y = g.neighbour(x, i);
      if (y != nb[x][0] && y != nb[x][1]) out.s2[l.label[x]] = l.label[y];
    }
  }
  return out;
}

BlockLayout BlockLayout::of(const FactorType& type) {
  BlockLayout lay;
  if (static_cast<int>(type.size()) > kMaxCycles) throw GraphError("too many cycles");
  lay.blocks = static_cast<int>(type.size());
  int at = 0;
  for (int b = 0; b < lay.blocks; ++b) {
    lay.start[b] = static_cast<int8_t>(at);
    lay.len[b] = static_cast<int8_t>(type[b]);
    for (int i = 0; i < type[b]; ++i) lay.block_of[at + i] = static_cast<int8_t>(b);
    at += type[b];
  }
  lay.n = at;
  if (at > kMaxVertices) throw GraphError("too many vertices");
  return lay;
}

LabelFactor LabelFactor::of(const CubicGraph& g, const TwoFactor& f) {
  LabelFactor lf;
  if (static_cast<int>(f.cycles.size()) > kMaxCycles) throw GraphError("too many cycles");
  lf.cycles = static_cast<int>(f.cycles.size());
  lf.cross.fill(kUndefined);
  int at = 0;
  std::vector<std::array<int, 2>> nb(g.order());
  for (int c = 0; c < lf.cycles; ++c) {
    const auto& cy = f.cycles[c];
    lf.len[c] = static_cast<int8_t>(cy.size());
    lf.first[c] = static_cast<int8_t>(at);
    for (size_t i = 0; i < cy.size(); ++i) {
      lf.verts[at + i] = static_cast<int8_t>(cy[i]);
      lf.cyc_of[cy[i]] = static_cast<int8_t>(c);
      lf.pos_of[cy[i]] = static_cast<int8_t>(i);
      nb[cy[i]] = {cy[(i + 1) % cy.size()], cy[(i + cy.size() - 1) % cy.size()]};
    }
    at += static_cast<int>(cy.size());
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    if (g.degree(x) < 3) continue;
    for (int i = 0; i < 3; ++i) {
      const Vertex y = g.neighbour(x, i);
      if (y != nb[x][0] && y != nb[x][1]) lf.cross[x] = static_cast<int8_t>(y);
    }
  }
  return lf;
}

PrefixResult beats_prefix(const CubicGraph& g, const TwoFactor& f, const RepString& reference) {
  if (s1_of(f) != reference.s1) throw GraphError("beats_prefix: S1 differs from the reference");
  const BlockLayout lay = BlockLayout::of(f.type());
  const LabelFactor lf = LabelFactor::of(g, f);
  std::vector<int8_t> partner(g.order(), kUndefined);
  std::vector<int8_t> ref(reference.s2.begin(), reference.s2.end());
  PrefixResult out;
  const bool smaller = advance_labellings(lay, lf, partner.data(), ref.data(), LabelState::fresh(0),
                                          [&](const LabelState& s, int) { out.resume.push_back(s); });
  if (smaller) {
    out.verdict = PrefixVerdict::kSmaller;
    out.resume.clear();
  }
  return out;
}

}  // namespace snark
