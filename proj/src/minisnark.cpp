#include "snark/minisnark.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "snark/connectivity.hpp"

namespace snark {

namespace {

void partitions(int left, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = min_part; p <= left; ++p) {
    cur.push_back(p);
    partitions(left - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FactorType> enumerate_types(int n, int g, bool strong) {
  if (n <= 0 || n % 2) throw GraphError("enumerate_types: n must be positive and even");
  if (g < 3) throw GraphError("enumerate_types: girth bound must be at least 3");
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(n, g, cur, parts);
  std::vector<FactorType> out;
  for (auto& p : parts) {
    const auto odd = std::count_if(p.begin(), p.end(), [](int l) { return l % 2; });
    if (odd < 2) continue;
    if (strong && p.size() == 2) continue;
    out.push_back(normalise_type(p));
  }
  std::sort(out.begin(), out.end(),
            [](const FactorType& a, const FactorType& b) { return s1_of_type(a) < s1_of_type(b); });
  return out;
}

InitialGraph initial_graph(const FactorType& type) {
  int n = 0;
  for (int l : type) n += l;
  InitialGraph out{CubicGraph(n), {}, {}};
  int at = 0;
  for (int l : type) {
    std::vector<Vertex> cyc;
    for (int i = 0; i < l; ++i) {
      cyc.push_back(at + i);
      out.graph.add_edge(at + i, at + (i + 1) % l);
    }
    out.factor.cycles.push_back(std::move(cyc));
    at += l;
  }
  out.labelling.label.resize(n);
  for (int v = 0; v < n; ++v) out.labelling.label[v] = v;
  return out;
}

namespace {

using Mask = uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

struct Bucket {
  std::vector<LabelState> items;
  int start = 0;
};

struct UndoEntry {
  int bucket;
  int start;
  int size;
  int stamp;
};

struct KeyedEmission {
  long split_index;
  long seq;
  Emission emission;
};

class Worker {
 public:
  Worker(const MinisnarkOptions& opt, int mod, int res, std::function<void(KeyedEmission&&)> out)
      : opt_(opt), mod_(mod), res_(res), out_(std::move(out)) {}

  void run_type(const FactorType& type) {
    type_ = type;
    n_ = opt_.n;
    edges_total_ = n_ / 2;
    split_at_ = std::min(opt_.split_depth, edges_total_);
    lay_ = BlockLayout::of(type);
    ref_s1_ = s1_of_type(type);
    // Initial 2-regular graph.
    deg2_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    for (int b = 0; b < lay_.blocks; ++b) {
      const int s = lay_.start[b], l = lay_.len[b];
      for (int i = 0; i < l; ++i) {
        const int v = s + i;
        nbr_[v][0] = static_cast<int8_t>(s + (i + 1) % l);
        nbr_[v][1] = static_cast<int8_t>(s + (i + l - 1) % l);
        nbr_[v][2] = kUndefined;
        partner_[v] = kUndefined;
      }
    }
    pool_.clear();
    buckets_.assign(n_ + 1, Bucket{});
    stamps_.assign(n_ + 1, -1);
    undo_.clear();
    forbidden_.assign(edges_total_ + 1, {});
    // The initial graph's only 2-factor is F0 itself.
    LabelFactor f0;
    f0.cycles = lay_.blocks;
    f0.cross.fill(kUndefined);
    for (int b = 0; b < lay_.blocks; ++b) {
      f0.len[b] = lay_.len[b];
      f0.first[b] = lay_.start[b];
      for (int i = 0; i < lay_.len[b]; ++i) {
        const int v = lay_.start[b] + i;
        f0.verts[v] = static_cast<int8_t>(v);
        f0.cyc_of[v] = static_cast<int8_t>(b);
        f0.pos_of[v] = static_cast<int8_t>(i);
      }
    }
    pool_.push_back(f0);
    if (opt_.strong) {
      int odd[2], k = 0;
      for (int b = 0; b < lay_.blocks; ++b)
        if (lay_.len[b] % 2 && k < 3) {
          if (k < 2) odd[k] = b;
          ++k;
        }
      if (k == 2) forbid_across(0, block_mask(odd[0]), block_mask(odd[1]));
    }
    level_ = 0;
    if (opt_.speedup_b) {
      push_state(n_, LabelState::fresh(0));
      // Nothing is defined yet; this only spreads the labellings of F0.
      if (advance_bucket(n_)) return;  // cannot happen: no entry is defined
    }
    search(0);
  }

  MinisnarkStats stats;

 private:
  Mask block_mask(int b) const {
    const int s = lay_.start[b], l = lay_.len[b];
    return (l == 64 ? ~Mask{0} : (bit(l) - 1)) << s;
  }

  void forbid_across(int depth, Mask a, Mask b) {
    auto& f = forbidden_[depth];
    for (Mask m = a; m; m &= m - 1) f[std::countr_zero(m)] |= b;
    for (Mask m = b; m; m &= m - 1) f[std::countr_zero(m)] |= a;
  }

  // ---- cache buckets with undo ----
  void touch(int b) {
    if (stamps_[b] == level_) return;
    undo_.push_back({b, buckets_[b].start, static_cast<int>(buckets_[b].items.size()), stamps_[b]});
    stamps_[b] = level_;
  }

  void push_state(int b, const LabelState& s) {
    touch(b);
    buckets_[b].items.push_back(s);
  }

  void rollback(size_t mark) {
    while (undo_.size() > mark) {
      const UndoEntry u = undo_.back();
      undo_.pop_back();
      buckets_[u.bucket].items.resize(u.size);
      buckets_[u.bucket].start = u.start;
      stamps_[u.bucket] = u.stamp;
    }
  }

  // Advances every state of bucket b; waiting states are re-filed.
  bool advance_bucket(int b) {
    touch(b);
    Bucket& bk = buckets_[b];
    const int end = static_cast<int>(bk.items.size());
    const int begin = bk.start;
    bk.start = end;
    for (int i = begin; i < end; ++i) {
      const LabelState s = buckets_[b].items[i];
      const bool smaller = advance_labellings(lay_, pool_[s.factor], partner_, partner_, s,
                                              [&](const LabelState& t, int v) { push_state(v, t); });
      if (smaller) return true;
    }
    return false;
  }

  bool any_smaller_everywhere() {
    auto ignore = [](const LabelState&, int) {};
    if (!opt_.speedup_b) {
      for (size_t i = 0; i < pool_.size(); ++i)
        if (advance_labellings(lay_, pool_[i], partner_, partner_,
                               LabelState::fresh(static_cast<int32_t>(i)), ignore))
          return true;
      return false;
    }
    for (int b = 0; b <= n_; ++b) {
      const Bucket& bk = buckets_[b];
      for (size_t i = bk.start; i < bk.items.size(); ++i)
        if (advance_labellings(lay_, pool_[bk.items[i].factor], partner_, partner_, bk.items[i],
                               ignore))
          return true;
    }
    return false;
  }

  bool prefix_check(int v, int w) {
    if (!opt_.speedup_b) return any_smaller_everywhere();
    return advance_bucket(n_) || advance_bucket(v) || advance_bucket(w);
  }

  // ---- 2-factors through the new edge ----
  enum class FactorVerdict { kOk, kEven, kSmallerS1, kStrong };

  FactorVerdict scan_factors(int v, int w, int depth) {
    Mask deg3 = deg2_ ^ (n_ == 64 ? ~Mask{0} : bit(n_) - 1);
    new_v_ = v;
    new_w_ = w;
    depth_ = depth;
    verdict_ = FactorVerdict::kOk;
    match(deg3);
    return verdict_;
  }

  bool match(Mask unmatched) {
    if (!unmatched) return on_factor();
    const int x = std::countr_zero(unmatched);
    for (int i = 0; i < 3; ++i) {
      const int y = nbr_[x][i];
      if (y < 0 || !(unmatched >> y & 1)) continue;
      if ((x == new_v_ && y == new_w_) || (x == new_w_ && y == new_v_)) continue;
      mate_[x] = static_cast<int8_t>(y);
      mate_[y] = static_cast<int8_t>(x);
      if (!match(unmatched & ~bit(x) & ~bit(y))) return false;
    }
    return true;
  }

  int factor_next(int x, int prev) const {
    if (deg2_ >> x & 1) return nbr_[x][0] == prev ? nbr_[x][1] : nbr_[x][0];
    for (int i = 0; i < 3; ++i) {
      const int y = nbr_[x][i];
      if (y != mate_[x] && y != prev) return y;
    }
    return -1;
  }

  // Returns false to stop the enumeration.
  bool on_factor() {
    int8_t verts[kMaxVertices];
    int starts[kMaxVertices], lens[kMaxVertices];
    int cycles = 0, at = 0, odd = 0;
    Mask seen = 0;
    const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    while (seen != all) {
      const int s = std::countr_zero(~seen & all);
      starts[cycles] = at;
      int prev = -1, x = s;
      do {
        seen |= bit(x);
        verts[at++] = static_cast<int8_t>(x);
        const int nx = factor_next(x, prev);
        prev = x;
        x = nx;
      } while (x != s);
      lens[cycles] = at - starts[cycles];
      odd += lens[cycles] % 2;
      ++cycles;
    }
    if (odd == 0) {
      verdict_ = FactorVerdict::kEven;
      ++stats.rejected_even;
      return false;
    }
    // Compare S1 with the reference.
    int ol[kMaxVertices], el[kMaxVertices], no = 0, ne = 0;
    for (int c = 0; c < cycles; ++c) (lens[c] % 2 ? ol[no++] : el[ne++]) = lens[c];
    std::sort(ol, ol + no, std::greater<int>());
    std::sort(el, el + ne, std::greater<int>());
    int s1[kMaxVertices + 2], k = 0;
    for (int i = 0; i < no; ++i) s1[k++] = -ol[i];
    s1[k++] = 0;
    for (int i = 0; i < ne; ++i) s1[k++] = -el[i];
    s1[k++] = 0;
    const int cmp = compare_s1(s1, k);
    if (cmp < 0) {
      verdict_ = FactorVerdict::kSmallerS1;
      ++stats.rejected_s1;
      return false;
    }
    if (opt_.strong && odd == 2) {
      Mask a = 0, b = 0;
      for (int c = 0; c < cycles; ++c) {
        if (lens[c] % 2 == 0) continue;
        Mask& m = a ? b : a;
        for (int i = 0; i < lens[c]; ++i) m |= bit(verts[starts[c] + i]);
      }
      for (Mask m = a; m; m &= m - 1) {
        const int x = std::countr_zero(m);
        if (!(deg2_ >> x & 1) && (b >> mate_[x] & 1)) {
          verdict_ = FactorVerdict::kStrong;
          ++stats.rejected_strong;
          return false;
        }
      }
      forbid_across(depth_, a, b);
    }
    if (cmp == 0) {
      LabelFactor f;
      f.cycles = cycles;
      f.cross.fill(kUndefined);
      for (int c = 0; c < cycles; ++c) {
        f.len[c] = static_cast<int8_t>(lens[c]);
        f.first[c] = static_cast<int8_t>(starts[c]);
        for (int i = 0; i < lens[c]; ++i) {
          const int x = verts[starts[c] + i];
          f.verts[starts[c] + i] = static_cast<int8_t>(x);
          f.cyc_of[x] = static_cast<int8_t>(c);
          f.pos_of[x] = static_cast<int8_t>(i);
          if (!(deg2_ >> x & 1)) f.cross[x] = mate_[x];
        }
      }
      pool_.push_back(f);
      if (opt_.speedup_b) push_state(n_, LabelState::fresh(static_cast<int32_t>(pool_.size() - 1)));
    }
    return true;
  }

  int compare_s1(const int* s1, int k) const {
    const int m = static_cast<int>(ref_s1_.size());
    for (int i = 0; i < std::min(k, m); ++i)
      if (s1[i] != ref_s1_[i]) return s1[i] < ref_s1_[i] ? -1 : 1;
    return k < m ? -1 : (k > m ? 1 : 0);
  }

  // ---- search ----
  Mask ball(int v) const {
    Mask b = bit(v), frontier = b;
    for (int r = 0; r < opt_.girth - 2 && frontier; ++r) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) {
        const int x = std::countr_zero(m);
        for (int i = 0; i < 3; ++i)
          if (nbr_[x][i] >= 0) next |= bit(nbr_[x][i]);
      }
      frontier = next & ~b;
      b |= next;
    }
    return b;
  }

  void insert(int v, int w) {
    nbr_[v][2] = static_cast<int8_t>(w);
    nbr_[w][2] = static_cast<int8_t>(v);
    partner_[v] = static_cast<int8_t>(w);
    partner_[w] = static_cast<int8_t>(v);
    deg2_ &= ~bit(v) & ~bit(w);
  }

  void remove(int v, int w) {
    nbr_[v][2] = nbr_[w][2] = kUndefined;
    partner_[v] = partner_[w] = kUndefined;
    deg2_ |= bit(v) | bit(w);
  }

  void search(int depth) {
    ++stats.nodes;
    if (depth == edges_total_) {
      complete();
      return;
    }
    const int v = std::countr_zero(deg2_);
    Mask cand = deg2_ & ~ball(v) & (v == 63 ? 0 : ~(bit(v + 1) - 1));
    if (opt_.strong) cand &= ~forbidden_[depth][v];
    for (; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      insert(v, w);
      const int d = depth + 1;
      bool keep = true;
      if (d == split_at_) {
        split_index_ = split_counter_++;
        seq_ = 0;
        keep = split_index_ % mod_ == res_;
      }
      if (keep) {
        const size_t pool_mark = pool_.size();
        const size_t undo_mark = undo_.size();
        const int saved_level = level_;
        level_ = d;
        if (opt_.strong) forbidden_[d] = forbidden_[depth];
        if (scan_factors(v, w, d) == FactorVerdict::kOk) {
          const bool skip = opt_.speedup_a && d < edges_total_ && d >= edges_total_ - 3;
          if (d == edges_total_ || skip || !prefix_check(v, w)) search(d);
          else ++stats.rejected_prefix;
        }
        rollback(undo_mark);
        pool_.resize(pool_mark);
        level_ = saved_level;
      }
      remove(v, w);
    }
  }

  void complete() {
    if (any_smaller_everywhere()) {
      ++stats.rejected_prefix;
      return;
    }
    CubicGraph g(n_);
    for (int v = 0; v < n_; ++v)
      for (int i = 0; i < 3; ++i)
        if (nbr_[v][i] > v) g.add_edge(v, nbr_[v][i]);
    if (opt_.final_class_check && !is_class_two(g)) {
      ++stats.rejected_final;
      return;
    }
    if (!is_cyclically_k_connected(g, 4)) {
      ++stats.rejected_final;
      return;
    }
    ++stats.emitted;
    ++stats.per_type[type_];
    out_(KeyedEmission{split_index_, seq_++, Emission{std::move(g), type_}});
  }

  const MinisnarkOptions& opt_;
  const int mod_, res_;
  std::function<void(KeyedEmission&&)> out_;

  FactorType type_;
  int n_ = 0, edges_total_ = 0, split_at_ = 0;
  BlockLayout lay_;
  std::vector<int> ref_s1_;
  int8_t nbr_[kMaxVertices][3];
  int8_t partner_[kMaxVertices];
  int8_t mate_[kMaxVertices];
  Mask deg2_ = 0;

  std::vector<LabelFactor> pool_;
  std::vector<Bucket> buckets_;
  std::vector<int> stamps_;
  std::vector<UndoEntry> undo_;
  int level_ = 0;
  std::vector<std::array<Mask, kMaxVertices>> forbidden_;

  int new_v_ = -1, new_w_ = -1, depth_ = 0;
  FactorVerdict verdict_ = FactorVerdict::kOk;

  long split_counter_ = 0;
  long split_index_ = -1;
  long seq_ = 0;
};

void merge_stats(MinisnarkStats& into, const MinisnarkStats& s) {
  into.nodes += s.nodes;
  into.emitted += s.emitted;
  into.rejected_even += s.rejected_even;
  into.rejected_s1 += s.rejected_s1;
  into.rejected_prefix += s.rejected_prefix;
  into.rejected_final += s.rejected_final;
  into.rejected_strong += s.rejected_strong;
  for (const auto& [t, c] : s.per_type) into.per_type[t] += c;
}

}  // namespace

MinisnarkStats run_minisnark(const MinisnarkOptions& opt,
                             const std::function<void(const Emission&)>& sink) {
  if (opt.n <= 0 || opt.n % 2 || opt.n > kMaxVertices)
    throw GraphError("minisnark: n must be even and at most 64");
  if (opt.girth < 3) throw GraphError("minisnark: girth bound must be at least 3");
  if (opt.mod < 1 || opt.res < 0 || opt.res >= opt.mod) throw GraphError("minisnark: bad res/mod");
  if (opt.split_depth < 1) throw GraphError("minisnark: split depth must be positive");
  std::vector<FactorType> types = enumerate_types(opt.n, opt.girth, opt.strong);
  if (!opt.only_types.empty()) {
    std::vector<FactorType> kept;
    for (const auto& t : types)
      if (std::find(opt.only_types.begin(), opt.only_types.end(), t) != opt.only_types.end())
        kept.push_back(t);
    types = kept;
  }
  MinisnarkStats total;
  const int threads = std::max(1, opt.threads);
  if (threads == 1) {
    Worker w(opt, opt.mod, opt.res, [&](KeyedEmission&& e) { sink(e.emission); });
    for (const auto& t : types) w.run_type(t);
    return w.stats;
  }
  std::vector<std::vector<KeyedEmission>> parts(threads);
  std::vector<MinisnarkStats> part_stats(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Worker w(opt, opt.mod * threads, opt.res + opt.mod * t,
               [&](KeyedEmission&& e) { parts[t].push_back(std::move(e)); });
      for (const auto& ty : types) w.run_type(ty);
      part_stats[t] = w.stats;
    });
  }
  for (auto& th : pool) th.join();
  std::vector<KeyedEmission> all;
  for (auto& p : parts)
    for (auto& e : p) all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), [](const KeyedEmission& a, const KeyedEmission& b) {
    return a.split_index != b.split_index ? a.split_index < b.split_index : a.seq < b.seq;
  });
  for (const auto& e : all) sink(e.emission);
  for (const auto& s : part_stats) merge_stats(total, s);
  // Nodes above the split depth are visited by every thread.
  return total;
}

std::vector<Emission> generate_proper(const MinisnarkOptions& opt, MinisnarkStats* stats) {
  std::vector<Emission> out;
  const auto s = run_minisnark(opt, [&](const Emission& e) { out.push_back(e); });
  if (stats) *stats = s;
  return out;
}

}  // namespace snark
