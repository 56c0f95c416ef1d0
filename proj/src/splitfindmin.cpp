#include "mstsens/splitfindmin.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "mstsens/ackermann.hpp"

namespace mstsens {

namespace {

// Cached minimum: key plus the original (outermost) element attaining it
// (owner) and an exact witness position (local).  For block/sequence min
// cells, local is the witness element of the instance holding the cell;
// for element key cells of a child instance, local is the witness in the
// *parent* numbering (a child element is a parent block).  Exactness
// matters: splits decide which side inherits a cached min by comparing the
// witness position against the split point.
struct entry {
  sf_key k;
  int owner = -1;
  int local = -1;
};

struct chain_slot {
  entry* cell;
  int local;
};

[[noreturn]] void fail(const std::string& what) {
  throw std::logic_error("split_findmin audit: " + what);
}

// Recursive structure.  Level 1 keeps power-of-two blocks per sequence in
// bitonic order.  Level i >= 2 keeps plateaus: a level-j plateau is a run
// of equally sized blocks (block size is the (i,j) entry of the Ackermann
// table), managed as elements of a level-(i-1) child instance keyed by
// block minima.  Each sequence caches its minimum, so findmin is free.
class sf_core {
 public:
  sf_core(int level, std::vector<entry> keys, comparison_counter* cnt,
          sf_op tag)
      : level_(level), cnt_(cnt), keys_(std::move(keys)) {
    int n = int(keys_.size());
    seq s;
    s.start = 0;
    s.end = n - 1;
    if (level_ == 1) {
      s.blocks = pow2_desc(0, n - 1, tag);
      s.min = fold_blocks(s.blocks, tag);
    } else {
      s.items = partition_desc(0, n - 1, tag);
      s.min = fold_items(s.items, tag);
    }
    seqs_.emplace(0, std::move(s));
  }

  int size() const { return int(keys_.size()); }
  const entry& key(int e) const { return keys_[e]; }

  const entry& seq_min(int e) const { return seq_of(e)->second.min; }

  std::pair<int, int> seq_interval(int e) const {
    auto& s = seq_of(e)->second;
    return {s.start, s.end};
  }

  void split(int e, sf_op tag) {
    auto sit = seq_mut(e);
    seq& s = sit->second;
    if (e == s.start) return;
    seq left, right;
    left.start = s.start;
    left.end = e - 1;
    right.start = e;
    right.end = s.end;

    if (level_ == 1) {
      int bi = block_index(s, e);
      const block b = s.blocks[bi];
      left.blocks.assign(s.blocks.begin(), s.blocks.begin() + bi);
      if (e == b.start) {
        right.blocks.assign(s.blocks.begin() + bi, s.blocks.end());
      } else {
        auto mid_l = pow2_desc(b.start, e - 1, tag);
        left.blocks.insert(left.blocks.end(), mid_l.begin(), mid_l.end());
        right.blocks = pow2_asc(e, b.start + b.size - 1, tag);
        right.blocks.insert(right.blocks.end(), s.blocks.begin() + bi + 1,
                            s.blocks.end());
      }
    } else {
      int ii = item_index(s, e);
      const item it = s.items[ii];
      left.items.assign(s.items.begin(), s.items.begin() + ii);
      if (it.child == -1) {  // singleton, e == it.lo
        right.items.assign(s.items.begin() + ii, s.items.end());
      } else {
        int bs = block_width(it.level_j);
        int r = (e - it.lo) / bs;
        int off = (e - it.lo) % bs;
        int ce = it.c_lo + r;
        if (off == 0 && ce == it.c_lo) {
          right.items.assign(s.items.begin() + ii, s.items.end());
        } else if (off == 0) {
          children_[it.child]->split(ce, tag);
          item pl = it, pr = it;
          pl.c_hi = ce - 1;
          pl.hi = it.lo + r * bs - 1;
          pr.c_lo = ce;
          pr.lo = it.lo + r * bs;
          left.items.push_back(pl);
          right.items.push_back(pr);
          right.items.insert(right.items.end(), s.items.begin() + ii + 1,
                             s.items.end());
        } else {
          // e lands inside block ce: isolate it in the child, then lay the
          // two fragments out as fresh plateaus of strictly lower level.
          if (ce > it.c_lo) children_[it.child]->split(ce, tag);
          if (ce < it.c_hi) children_[it.child]->split(ce + 1, tag);
          int b_lo = it.lo + r * bs;
          int b_hi = b_lo + bs - 1;
          if (ce > it.c_lo) {
            item pl = it;
            pl.c_hi = ce - 1;
            pl.hi = b_lo - 1;
            left.items.push_back(pl);
          }
          auto mid_l = partition_desc(b_lo, e - 1, tag);
          left.items.insert(left.items.end(), mid_l.begin(), mid_l.end());
          right.items = partition_asc(e, b_hi, tag);
          if (ce < it.c_hi) {
            item pr = it;
            pr.c_lo = ce + 1;
            pr.lo = b_hi + 1;
            right.items.push_back(pr);
          }
          right.items.insert(right.items.end(), s.items.begin() + ii + 1,
                             s.items.end());
        }
      }
    }

    const entry old = s.min;
    bool left_inherits = old.local < e;
    if (level_ == 1) {
      left.min = left_inherits ? old : fold_blocks(left.blocks, tag);
      right.min = left_inherits ? fold_blocks(right.blocks, tag) : old;
    } else {
      left.min = left_inherits ? old : fold_items(left.items, tag);
      right.min = left_inherits ? fold_items(right.items, tag) : old;
    }
    sit->second = std::move(left);
    seqs_.emplace(e, std::move(right));
  }

  // Chain of cached minima affected by a decreasekey on e, ordered from the
  // element key down to the innermost block and back up through sequence
  // minima.  Values along the chain are nonincreasing.  Each slot carries
  // the witness to install on update: for our own key cell that is e in the
  // caller's numbering (patched below for child cells), for min cells it is
  // e in our numbering.
  void collect_chain(int e, std::vector<chain_slot>& down,
                     std::vector<chain_slot>& up) {
    down.push_back({&keys_[e], e});
    auto sit = seq_mut(e);
    seq& s = sit->second;
    if (level_ == 1) {
      int bi = block_index(s, e);
      down.push_back({&s.blocks[bi].min, e});
    } else {
      int ii = item_index(s, e);
      item& it = s.items[ii];
      if (it.child != -1) {
        int ce = it.c_lo + (e - it.lo) / block_width(it.level_j);
        std::size_t pre = down.size();
        children_[it.child]->collect_chain(ce, down, up);
        down[pre].local = e;  // child key cell witnesses our element
      }
    }
    up.push_back({&s.min, e});
  }

  void shape(int e, std::vector<sf_item_shape>& out) const {
    const seq& s = seq_of(e)->second;
    if (level_ == 1) {
      for (const block& b : s.blocks) out.push_back({0, 1, b.size});
    } else {
      for (const item& it : s.items) {
        if (it.child == -1)
          out.push_back({-1, 1, 1});
        else
          out.push_back(
              {it.level_j, it.c_hi - it.c_lo + 1, block_width(it.level_j)});
      }
    }
  }

  void audit(bool root = true) const {
    int n = int(keys_.size());
    if (root)
      for (int e = 0; e < n; ++e)
        if (keys_[e].local != e) fail("element key local mismatch");
    int expect = 0;
    for (const auto& [start, s] : seqs_) {
      if (s.start != start || s.start != expect || s.end < s.start)
        fail("sequence partition broken");
      expect = s.end + 1;
      if (level_ == 1)
        audit_blocks(s);
      else
        audit_items(s);
      check_min(s.min, s.start, s.end, "sequence");
    }
    if (expect != n) fail("sequences do not cover all elements");
    for (const auto& c : children_) c->audit(false);
    for (int e = 0; e < n; ++e) audit_chain(e);
  }

 private:
  struct block {
    int start = 0;
    int size = 0;
    entry min;
  };
  struct item {
    int level_j = 0;
    int child = -1;  // -1: singleton
    int c_lo = 0, c_hi = 0;
    int lo = 0, hi = 0;
  };
  struct seq {
    int start = 0, end = 0;
    entry min;
    std::vector<block> blocks;
    std::vector<item> items;
  };

  int level_;
  comparison_counter* cnt_;
  std::vector<entry> keys_;
  std::map<int, seq> seqs_;
  std::vector<std::unique_ptr<sf_core>> children_;

  bool less(const entry& a, const entry& b, sf_op tag) {
    cnt_->count(tag);
    return sf_key_less(a.k, b.k);
  }

  int block_width(int j) const {
    ack_value v = ackermann(level_, j);
    return int(v.value);
  }

  int max_plateau_level(int len) const {  // largest j with width(j) <= len
    int j = 1;
    while (!ackermann(level_, j + 1).exceeds(std::uint64_t(len))) ++j;
    return j;
  }

  std::map<int, seq>::const_iterator seq_of(int e) const {
    auto it = seqs_.upper_bound(e);
    --it;
    return it;
  }
  std::map<int, seq>::iterator seq_mut(int e) {
    auto it = seqs_.upper_bound(e);
    --it;
    return it;
  }

  static int block_index(const seq& s, int e) {
    int lo = 0, hi = int(s.blocks.size()) - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (s.blocks[mid].start <= e)
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  }
  static int item_index(const seq& s, int e) {
    int lo = 0, hi = int(s.items.size()) - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (s.items[mid].lo <= e)
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  }

  entry scan_min(int start, int size, sf_op tag) {
    int best = start;
    for (int t = start + 1; t < start + size; ++t)
      if (less(keys_[t], keys_[best], tag)) best = t;
    entry m = keys_[best];
    m.local = best;
    return m;
  }

  std::vector<block> pow2_desc(int lo, int hi, sf_op tag) {
    std::vector<block> out;
    int cur = lo;
    int len = hi - lo + 1;
    while (len > 0) {
      int bs = int(std::bit_floor(unsigned(len)));
      out.push_back({cur, bs, scan_min(cur, bs, tag)});
      cur += bs;
      len -= bs;
    }
    return out;
  }

  std::vector<block> pow2_asc(int lo, int hi, sf_op tag) {
    std::vector<block> out;
    int cur = hi;
    int len = hi - lo + 1;
    while (len > 0) {
      int bs = int(std::bit_floor(unsigned(len)));
      out.push_back({cur - bs + 1, bs, scan_min(cur - bs + 1, bs, tag)});
      cur -= bs;
      len -= bs;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  item make_singleton(int pos) const {
    item it;
    it.level_j = 0;
    it.child = -1;
    it.lo = it.hi = pos;
    return it;
  }

  item make_plateau(int lo, int j, int nb, sf_op tag) {
    int bs = block_width(j);
    std::vector<entry> ck;
    ck.reserve(nb);
    for (int b = 0; b < nb; ++b) ck.push_back(scan_min(lo + b * bs, bs, tag));
    children_.push_back(
        std::make_unique<sf_core>(level_ - 1, std::move(ck), cnt_, tag));
    item it;
    it.level_j = j;
    it.child = int(children_.size()) - 1;
    it.c_lo = 0;
    it.c_hi = nb - 1;
    it.lo = lo;
    it.hi = lo + nb * bs - 1;
    return it;
  }

  std::vector<item> partition_desc(int lo, int hi, sf_op tag) {
    std::vector<item> out;
    int cur = lo;
    int len = hi - lo + 1;
    while (len >= 2) {
      int j = max_plateau_level(len);
      int bs = block_width(j);
      int nb = len / bs;
      out.push_back(make_plateau(cur, j, nb, tag));
      cur += nb * bs;
      len -= nb * bs;
    }
    if (len == 1) out.push_back(make_singleton(cur));
    return out;
  }

  std::vector<item> partition_asc(int lo, int hi, sf_op tag) {
    std::vector<item> rev;
    int cur = hi;
    int len = hi - lo + 1;
    while (len >= 2) {
      int j = max_plateau_level(len);
      int bs = block_width(j);
      int nb = len / bs;
      rev.push_back(make_plateau(cur - nb * bs + 1, j, nb, tag));
      cur -= nb * bs;
      len -= nb * bs;
    }
    if (len == 1) rev.push_back(make_singleton(lo));
    std::reverse(rev.begin(), rev.end());
    return rev;
  }

  entry fold_blocks(const std::vector<block>& bs, sf_op tag) {
    entry m = bs[0].min;
    for (std::size_t t = 1; t < bs.size(); ++t)
      if (less(bs[t].min, m, tag)) m = bs[t].min;
    return m;
  }

  entry fold_items(const std::vector<item>& items, sf_op tag) {
    entry m = fold_item_one(items[0]);
    for (std::size_t t = 1; t < items.size(); ++t) {
      entry c = fold_item_one(items[t]);
      if (less(c, m, tag)) m = c;
    }
    return m;
  }

  entry fold_item_one(const item& it) const {
    if (it.child == -1) {
      entry m = keys_[it.lo];
      m.local = it.lo;  // key cells of child instances witness foreign slots
      return m;
    }
    entry m = children_[it.child]->seq_min(it.c_lo);
    // m.local is the child element (block) attaining the min; that block's
    // key cell records the exact witness in our numbering.
    m.local = children_[it.child]->key(m.local).local;
    return m;
  }

  // audit helpers -------------------------------------------------------

  entry raw_min(int start, int end) const {
    entry m = keys_[start];
    for (int t = start + 1; t <= end; ++t)
      if (sf_key_less(keys_[t].k, m.k)) m = keys_[t];
    return m;
  }

  void check_min(const entry& got, int start, int end,
                 const char* what) const {
    entry want = raw_min(start, end);
    if (!(got.k == want.k)) fail(std::string(what) + " min key wrong");
    if (got.local < start || got.local > end)
      fail(std::string(what) + " min witness out of range");
    if (!(keys_[got.local].k == got.k) || keys_[got.local].owner != got.owner)
      fail(std::string(what) + " min witness inconsistent");
  }

  void audit_blocks(const seq& s) const {
    if (s.blocks.empty()) fail("sequence without blocks");
    int expect = s.start;
    std::vector<int> sizes;
    for (const block& b : s.blocks) {
      if (b.start != expect || b.size < 1) fail("block layout broken");
      if (std::bit_floor(unsigned(b.size)) != unsigned(b.size))
        fail("block size not a power of two");
      expect = b.start + b.size;
      sizes.push_back(b.size);
      check_min(b.min, b.start, b.start + b.size - 1, "block");
    }
    if (expect != s.end + 1) fail("blocks do not cover sequence");
    audit_bitonic(sizes, 1);
  }

  // strictly increasing then strictly decreasing, allowing one equal
  // adjacent pair at the peak (max_dup 1), or at most max_dup copies of any
  // value arranged bitonically.
  static void audit_bitonic(const std::vector<int>& v, int max_dup) {
    if (v.size() <= 1) return;
    std::map<int, int> cnt;
    for (int x : v)
      if (++cnt[x] > (max_dup == 1 ? 2 : max_dup)) fail("size repeated");
    std::size_t t = 1;
    while (t < v.size() && v[t] > v[t - 1]) ++t;
    if (max_dup == 1 && t < v.size() && v[t] == v[t - 1]) ++t;  // peak pair
    while (t < v.size() && v[t] < v[t - 1]) ++t;
    if (max_dup > 1) {  // plateau levels: nondecreasing then nonincreasing
      t = 1;
      while (t < v.size() && v[t] >= v[t - 1]) ++t;
      while (t < v.size() && v[t] <= v[t - 1]) ++t;
    }
    if (t != v.size()) fail("sizes not bitonic");
  }

  void audit_items(const seq& s) const {
    if (s.items.empty()) fail("sequence without items");
    int expect = s.start;
    std::vector<int> levels;
    std::size_t idx = 0;
    for (const item& it : s.items) {
      if (it.lo != expect || it.hi < it.lo) fail("item layout broken");
      expect = it.hi + 1;
      if (it.child == -1) {
        if (it.hi != it.lo) fail("singleton width");
        bool at_edge = idx == 0 || idx + 1 == s.items.size();
        if (!at_edge) fail("singleton not at sequence edge");
      } else {
        levels.push_back(it.level_j);
        audit_plateau(it);
      }
      ++idx;
    }
    if (expect != s.end + 1) fail("items do not cover sequence");
    audit_bitonic(levels, 2);
    int n_seq = s.end - s.start + 1;
    int bound = 2 * (ack_lambda(level_, std::uint64_t(n_seq)) - 1);
    if (int(levels.size()) > std::max(bound, 0)) fail("too many plateaus");
    int singles = int(s.items.size()) - int(levels.size());
    if (singles > 2) fail("too many singletons");
  }

  void audit_plateau(const item& it) const {
    int bs = block_width(it.level_j);
    int nb = it.c_hi - it.c_lo + 1;
    if (nb < 1 || it.hi - it.lo + 1 != nb * bs) fail("plateau extent wrong");
    ack_value lim = ackermann(level_ - 1, bs);
    if (!lim.saturated && std::uint64_t(nb) >= lim.value)
      fail("plateau has too many blocks");
    const sf_core& c = *children_[it.child];
    auto [clo, chi] = c.seq_interval(it.c_lo);
    if (clo != it.c_lo || chi != it.c_hi)
      fail("plateau misaligned with child sequence");
    for (int b = 0; b < nb; ++b) {
      entry want = raw_min(it.lo + b * bs, it.lo + (b + 1) * bs - 1);
      const entry& got = c.key(it.c_lo + b);
      if (!(got.k == want.k)) fail("child key is not the block minimum");
      if (got.local < it.lo + b * bs || got.local > it.lo + (b + 1) * bs - 1)
        fail("child key witness outside its block");
      if (!(keys_[got.local].k == got.k) ||
          keys_[got.local].owner != got.owner)
        fail("child key witness inconsistent");
    }
  }

  void audit_chain(int e) const {
    std::vector<chain_slot> down, up;
    auto* self = const_cast<sf_core*>(this);
    self->collect_chain(e, down, up);
    down.insert(down.end(), up.begin(), up.end());
    for (std::size_t t = 1; t < down.size(); ++t)
      if (sf_key_less(down[t - 1].cell->k, down[t].cell->k))
        fail("chain of cached minima not nonincreasing");
  }
};

// Decreasekey over a gathered chain: find how deep the new key wins and
// rewrite that prefix.  The boundary is found either by an early-exit
// linear scan (at most one comparison per slot) or by binary search over
// the nonincreasing chain.
int chain_boundary(const std::vector<chain_slot>& chain, sf_key w,
                   bool binary, comparison_counter* cnt) {
  int len = int(chain.size());
  auto wins = [&](int t) {
    cnt->count(sf_op::decreasekey);
    return sf_key_less(w, chain[t].cell->k);
  };
  if (binary) {
    int lo = 0, hi = len;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (wins(mid))
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  }
  int p = 0;
  while (p < len && wins(p)) ++p;
  return p;
}

void chain_apply(const std::vector<chain_slot>& chain, int p, sf_key w,
                 int owner) {
  for (int t = 0; t < p; ++t) *chain[t].cell = entry{w, owner, chain[t].local};
}

void chain_decreasekey(sf_core& top, int e, sf_key w, int owner, bool binary,
                       comparison_counter* cnt) {
  std::vector<chain_slot> chain, up;
  top.collect_chain(e, chain, up);
  chain.insert(chain.end(), up.begin(), up.end());
  chain_apply(chain, chain_boundary(chain, w, binary, cnt), w, owner);
}

// Blocks of exactly `level` consecutive elements; unbroken blocks are the
// elements of one inner recursive instance, broken blocks and the tail
// remainder live as loose runs at sequence ends, handled by linear scans.
// Keys inside an unbroken block are kept sorted.
class sf_star {
 public:
  sf_star(int level, std::vector<entry> keys, comparison_counter* cnt,
          bool binary)
      : bs_(level), binary_(binary), cnt_(cnt), keys_(std::move(keys)) {
    int n = int(keys_.size());
    for (int e = 0; e < n; ++e) keys_[e].local = e;
    full_blocks_ = n / bs_;
    order_.resize(full_blocks_);
    std::vector<entry> ck;
    ck.reserve(full_blocks_);
    for (int b = 0; b < full_blocks_; ++b) {
      order_[b] = sort_block(b, sf_op::init);
      ck.push_back(keys_[order_[b][0]]);  // local = witness in our numbering
    }
    if (full_blocks_ > 0)
      inner_ = std::make_unique<sf_core>(level, std::move(ck), cnt_,
                                         sf_op::init);
    seq s;
    s.start = 0;
    s.end = n - 1;
    s.ib_lo = 0;
    s.ib_hi = full_blocks_ - 1;
    if (full_blocks_ * bs_ < n) {
      s.lr_lo = full_blocks_ * bs_;
      s.lr_hi = n - 1;
    }
    s.min = fold_seq(s, sf_op::init);
    seqs_.emplace(0, std::move(s));
  }

  int size() const { return int(keys_.size()); }
  const entry& key(int e) const { return keys_[e]; }
  const entry& seq_min(int e) const { return seq_of(e)->second.min; }

  std::pair<int, int> seq_interval(int e) const {
    auto& s = seq_of(e)->second;
    return {s.start, s.end};
  }

  void decreasekey(int e, sf_key w) {
    auto sit = seq_mut(e);
    seq& s = sit->second;
    cnt_->count(sf_op::decreasekey);
    if (!sf_key_less(w, keys_[e].k)) return;
    keys_[e] = entry{w, e, e};
    if (!in_range(s.ll_lo, s.ll_hi, e) && !in_range(s.lr_lo, s.lr_hi, e)) {
      int b = e / bs_;
      auto& ord = order_[b];
      int idx = int(std::find(ord.begin(), ord.end(), e) - ord.begin());
      int lo = 0, hi = idx;
      while (lo < hi) {
        int mid = (lo + hi) / 2;
        cnt_->count(sf_op::decreasekey);
        if (sf_key_less(w, keys_[ord[mid]].k))
          hi = mid;
        else
          lo = mid + 1;
      }
      std::rotate(ord.begin() + lo, ord.begin() + idx, ord.begin() + idx + 1);
      std::vector<chain_slot> chain, up;
      inner_->collect_chain(b, chain, up);
      chain[0].local = e;  // inner key cell witnesses our element
      chain.insert(chain.end(), up.begin(), up.end());
      chain_apply(chain, chain_boundary(chain, w, binary_, cnt_), w, e);
    }
    cnt_->count(sf_op::decreasekey);
    if (sf_key_less(w, s.min.k)) s.min = entry{w, e, e};
  }

  void split(int e) {
    auto sit = seq_mut(e);
    seq& s = sit->second;
    if (e == s.start) return;
    seq L, R;
    L.start = s.start;
    L.end = e - 1;
    R.start = e;
    R.end = s.end;
    if (in_range(s.ll_lo, s.ll_hi, e)) {
      L.ll_lo = s.ll_lo;
      L.ll_hi = e - 1;
      R.ll_lo = e;
      R.ll_hi = s.ll_hi;
      R.ib_lo = s.ib_lo;
      R.ib_hi = s.ib_hi;
      R.lr_lo = s.lr_lo;
      R.lr_hi = s.lr_hi;
    } else if (in_range(s.lr_lo, s.lr_hi, e)) {
      L.ll_lo = s.ll_lo;
      L.ll_hi = s.ll_hi;
      L.ib_lo = s.ib_lo;
      L.ib_hi = s.ib_hi;
      L.lr_lo = s.lr_lo;
      L.lr_hi = e - 1;
      R.ll_lo = e;
      R.ll_hi = s.lr_hi;
    } else {
      int b = e / bs_;
      int off = e - b * bs_;
      if (off == 0) {
        if (b > s.ib_lo) inner_->split(b, sf_op::split);
        L.ll_lo = s.ll_lo;
        L.ll_hi = s.ll_hi;
        L.ib_lo = s.ib_lo;
        L.ib_hi = b - 1;
        R.ib_lo = b;
        R.ib_hi = s.ib_hi;
        R.lr_lo = s.lr_lo;
        R.lr_hi = s.lr_hi;
      } else {
        if (b > s.ib_lo) inner_->split(b, sf_op::split);
        if (b < s.ib_hi) inner_->split(b + 1, sf_op::split);
        order_[b].clear();
        L.ll_lo = s.ll_lo;
        L.ll_hi = s.ll_hi;
        L.ib_lo = s.ib_lo;
        L.ib_hi = b - 1;
        L.lr_lo = b * bs_;
        L.lr_hi = e - 1;
        R.ll_lo = e;
        R.ll_hi = b * bs_ + bs_ - 1;
        R.ib_lo = b + 1;
        R.ib_hi = s.ib_hi;
        R.lr_lo = s.lr_lo;
        R.lr_hi = s.lr_hi;
      }
    }
    normalize(L);
    normalize(R);
    const entry old = s.min;
    if (old.local < e) {
      L.min = old;
      R.min = fold_seq(R, sf_op::split);
    } else {
      R.min = old;
      L.min = fold_seq(L, sf_op::split);
    }
    sit->second = L;
    seqs_.emplace(e, R);
  }

  void shape(int e, std::vector<sf_item_shape>& out) const {
    const seq& s = seq_of(e)->second;
    if (s.ll_lo <= s.ll_hi) out.push_back({-2, 1, s.ll_hi - s.ll_lo + 1});
    if (s.ib_lo <= s.ib_hi)
      out.push_back({bs_, s.ib_hi - s.ib_lo + 1, bs_});
    if (s.lr_lo <= s.lr_hi) out.push_back({-2, 1, s.lr_hi - s.lr_lo + 1});
  }

  void audit() const {
    int n = int(keys_.size());
    for (int e = 0; e < n; ++e)
      if (keys_[e].local != e) fail("element key local mismatch");
    int expect = 0;
    for (const auto& [start, s] : seqs_) {
      if (s.start != start || s.start != expect) fail("sequence partition");
      expect = s.end + 1;
      int pos = s.start;
      if (s.ll_lo <= s.ll_hi) {
        if (s.ll_lo != pos || s.ll_hi - s.ll_lo + 1 >= bs_ + (bs_ == 1))
          fail("left loose run wrong");
        pos = s.ll_hi + 1;
      }
      if (s.ib_lo <= s.ib_hi) {
        if (s.ib_lo * bs_ != pos) fail("block run misplaced");
        pos = (s.ib_hi + 1) * bs_;
        if (inner_ == nullptr) fail("blocks without inner structure");
        auto [clo, chi] = inner_->seq_interval(s.ib_lo);
        if (clo != s.ib_lo || chi != s.ib_hi)
          fail("block run misaligned with inner sequence");
        for (int b = s.ib_lo; b <= s.ib_hi; ++b) audit_block(b);
      }
      if (s.lr_lo <= s.lr_hi) {
        if (s.lr_lo != pos || s.lr_hi - s.lr_lo + 1 >= bs_ + (bs_ == 1))
          fail("right loose run wrong");
        pos = s.lr_hi + 1;
      }
      if (pos != s.end + 1) fail("sequence regions do not cover it");
      // cached minimum
      entry want = keys_[s.start];
      for (int t = s.start + 1; t <= s.end; ++t)
        if (sf_key_less(keys_[t].k, want.k)) want = keys_[t];
      if (!(s.min.k == want.k)) fail("sequence min key wrong");
      if (s.min.local < s.start || s.min.local > s.end ||
          !(keys_[s.min.local].k == s.min.k))
        fail("sequence min witness inconsistent");
    }
    if (expect != n) fail("sequences do not cover all elements");
    if (inner_) inner_->audit(false);
  }

 private:
  struct seq {
    int start = 0, end = 0;
    entry min;
    int ll_lo = 0, ll_hi = -1;  // loose left
    int ib_lo = 0, ib_hi = -1;  // unbroken blocks (inner elements)
    int lr_lo = 0, lr_hi = -1;  // loose right
  };

  int bs_;
  bool binary_;
  comparison_counter* cnt_;
  std::vector<entry> keys_;
  int full_blocks_ = 0;
  std::unique_ptr<sf_core> inner_;
  std::vector<std::vector<int>> order_;
  std::map<int, seq> seqs_;

  static bool in_range(int lo, int hi, int e) { return lo <= e && e <= hi; }
  static void normalize(seq& s) {
    if (s.ll_lo > s.ll_hi) {
      s.ll_lo = 0;
      s.ll_hi = -1;
    }
    if (s.ib_lo > s.ib_hi) {
      s.ib_lo = 0;
      s.ib_hi = -1;
    }
    if (s.lr_lo > s.lr_hi) {
      s.lr_lo = 0;
      s.lr_hi = -1;
    }
  }

  std::map<int, seq>::const_iterator seq_of(int e) const {
    auto it = seqs_.upper_bound(e);
    --it;
    return it;
  }
  std::map<int, seq>::iterator seq_mut(int e) {
    auto it = seqs_.upper_bound(e);
    --it;
    return it;
  }

  std::vector<int> sort_block(int b, sf_op tag) {
    std::vector<int> idx(bs_);
    for (int t = 0; t < bs_; ++t) idx[t] = b * bs_ + t;
    for (int i = 1; i < bs_; ++i) {  // stable insertion sort, counted
      int x = idx[i];
      int j = i;
      while (j > 0) {
        cnt_->count(tag);
        if (!sf_key_less(keys_[x].k, keys_[idx[j - 1]].k)) break;
        idx[j] = idx[j - 1];
        --j;
      }
      idx[j] = x;
    }
    return idx;
  }

  entry fold_seq(const seq& s, sf_op tag) {
    bool have = false;
    entry m;
    auto take = [&](const entry& c) {
      if (!have) {
        m = c;
        have = true;
        return;
      }
      cnt_->count(tag);
      if (sf_key_less(c.k, m.k)) m = c;
    };
    for (int t = s.ll_lo; t <= s.ll_hi; ++t) take(keys_[t]);
    if (s.ib_lo <= s.ib_hi) {
      entry c = inner_->seq_min(s.ib_lo);
      c.local = inner_->key(c.local).local;  // hop to witness in our numbering
      take(c);
    }
    for (int t = s.lr_lo; t <= s.lr_hi; ++t) take(keys_[t]);
    return m;
  }

  void audit_block(int b) const {
    const auto& ord = order_[b];
    if (int(ord.size()) != bs_) fail("unbroken block order missing");
    std::vector<bool> seen(bs_, false);
    for (std::size_t t = 0; t < ord.size(); ++t) {
      int e = ord[t];
      if (e / bs_ != b) fail("order entry outside block");
      if (seen[e % bs_]) fail("order entry repeated");
      seen[e % bs_] = true;
      if (t > 0 && sf_key_less(keys_[e].k, keys_[ord[t - 1]].k))
        fail("block order not sorted");
    }
    const entry& ik = inner_->key(b);
    if (!(ik.k == keys_[ord[0]].k)) fail("inner key is not the block min");
    if (ik.local / bs_ != b || !(keys_[ik.local].k == ik.k))
      fail("inner key witness inconsistent");
  }
};

// Reference structure: cached sequence minima, splits rescan both halves.
class sf_naive {
 public:
  sf_naive(std::vector<entry> keys, comparison_counter* cnt)
      : cnt_(cnt), keys_(std::move(keys)) {
    int n = int(keys_.size());
    for (int e = 0; e < n; ++e) keys_[e].local = e;
    seqs_.emplace(0, seq{0, n - 1, fold(0, n - 1, sf_op::init)});
  }

  int size() const { return int(keys_.size()); }
  const entry& key(int e) const { return keys_[e]; }
  const entry& seq_min(int e) const { return seq_of(e)->second.min; }
  std::pair<int, int> seq_interval(int e) const {
    auto& s = seq_of(e)->second;
    return {s.start, s.end};
  }

  void split(int e) {
    auto sit = seq_mut(e);
    seq& s = sit->second;
    if (e == s.start) return;
    seq right{e, s.end, fold(e, s.end, sf_op::split)};
    s.end = e - 1;
    s.min = fold(s.start, s.end, sf_op::split);
    seqs_.emplace(e, right);
  }

  void decreasekey(int e, sf_key w) {
    cnt_->count(sf_op::decreasekey);
    if (!sf_key_less(w, keys_[e].k)) return;
    keys_[e] = entry{w, e, e};
    auto sit = seq_mut(e);
    cnt_->count(sf_op::decreasekey);
    if (sf_key_less(w, sit->second.min.k)) sit->second.min = entry{w, e, e};
  }

  void shape(int e, std::vector<sf_item_shape>& out) const {
    const seq& s = seq_of(e)->second;
    out.push_back({-2, 1, s.end - s.start + 1});
  }

  void audit() const {
    int expect = 0;
    for (const auto& [start, s] : seqs_) {
      if (s.start != start || s.start != expect) fail("sequence partition");
      expect = s.end + 1;
      entry want = keys_[s.start];
      for (int t = s.start + 1; t <= s.end; ++t)
        if (sf_key_less(keys_[t].k, want.k)) want = keys_[t];
      if (!(s.min.k == want.k)) fail("sequence min key wrong");
    }
    if (expect != int(keys_.size())) fail("sequences do not cover elements");
  }

 private:
  struct seq {
    int start, end;
    entry min;
  };
  comparison_counter* cnt_;
  std::vector<entry> keys_;
  std::map<int, seq> seqs_;

  std::map<int, seq>::const_iterator seq_of(int e) const {
    auto it = seqs_.upper_bound(e);
    --it;
    return it;
  }
  std::map<int, seq>::iterator seq_mut(int e) {
    auto it = seqs_.upper_bound(e);
    --it;
    return it;
  }

  entry fold(int start, int end, sf_op tag) {
    entry m = keys_[start];
    for (int t = start + 1; t <= end; ++t) {
      cnt_->count(tag);
      if (sf_key_less(keys_[t].k, m.k)) m = keys_[t];
    }
    return m;
  }
};

}  // namespace

struct split_findmin::impl {
  sf_options opt;
  int n = 0;
  int level = 0;
  comparison_counter counter;
  std::unique_ptr<sf_core> core;
  std::unique_ptr<sf_star> star;
  std::unique_ptr<sf_naive> naive;
};

namespace {

int resolve_level(const sf_options& opt, int n) {
  if (opt.level > 0) return opt.level;
  std::uint64_t m = opt.expected_ops ? opt.expected_ops : std::uint64_t(n);
  return std::clamp(ack_alpha(m, std::uint64_t(n)), 1, 4);
}

}  // namespace

split_findmin::split_findmin(std::vector<sf_key> keys, sf_options opt)
    : impl_(std::make_unique<impl>()) {
  int n = int(keys.size());
  if (n < 1) throw std::invalid_argument("split_findmin: empty key list");
  if (opt.level < 0) throw std::invalid_argument("split_findmin: bad level");
  impl_->opt = opt;
  impl_->n = n;
  std::vector<entry> es(n);
  for (int e = 0; e < n; ++e) es[e] = entry{keys[e], e, e};
  switch (opt.variant) {
    case sf_variant::naive:
      impl_->naive = std::make_unique<sf_naive>(std::move(es),
                                                &impl_->counter);
      impl_->level = 0;
      break;
    case sf_variant::basis:
      impl_->core = std::make_unique<sf_core>(1, std::move(es),
                                              &impl_->counter, sf_op::init);
      impl_->level = 1;
      break;
    case sf_variant::recursive:
      impl_->level = resolve_level(opt, n);
      impl_->core = std::make_unique<sf_core>(
          impl_->level, std::move(es), &impl_->counter, sf_op::init);
      break;
    case sf_variant::star:
      impl_->level = resolve_level(opt, n);
      impl_->star = std::make_unique<sf_star>(
          impl_->level, std::move(es), &impl_->counter,
          opt.binary_search_decreasekey);
      break;
  }
}

split_findmin::~split_findmin() = default;
split_findmin::split_findmin(split_findmin&&) noexcept = default;
split_findmin& split_findmin::operator=(split_findmin&&) noexcept = default;

int split_findmin::size() const { return impl_->n; }
int split_findmin::level() const { return impl_->level; }

static void check_elem(int e, int n) {
  if (e < 0 || e >= n)
    throw std::invalid_argument("split_findmin: element out of range");
}

void split_findmin::split(int e) {
  check_elem(e, impl_->n);
  if (impl_->core)
    impl_->core->split(e, sf_op::split);
  else if (impl_->star)
    impl_->star->split(e);
  else
    impl_->naive->split(e);
}

sf_findmin_result split_findmin::findmin(int e) const {
  check_elem(e, impl_->n);
  const entry& m = impl_->core    ? impl_->core->seq_min(e)
                   : impl_->star ? impl_->star->seq_min(e)
                                 : impl_->naive->seq_min(e);
  return {m.k, m.k.inf ? -1 : m.owner};
}

void split_findmin::decreasekey(int e, sf_key w) {
  check_elem(e, impl_->n);
  if (impl_->core) {
    bool binary = impl_->opt.variant == sf_variant::recursive &&
                  impl_->opt.binary_search_decreasekey;
    chain_decreasekey(*impl_->core, e, w, e, binary, &impl_->counter);
  } else if (impl_->star) {
    impl_->star->decreasekey(e, w);
  } else {
    impl_->naive->decreasekey(e, w);
  }
}

const comparison_counter& split_findmin::comparisons() const {
  return impl_->counter;
}

sf_key split_findmin::current_key(int e) const {
  check_elem(e, impl_->n);
  const entry& k = impl_->core    ? impl_->core->key(e)
                   : impl_->star ? impl_->star->key(e)
                                 : impl_->naive->key(e);
  return k.k;
}

std::pair<int, int> split_findmin::sequence_interval(int e) const {
  check_elem(e, impl_->n);
  return impl_->core    ? impl_->core->seq_interval(e)
         : impl_->star ? impl_->star->seq_interval(e)
                       : impl_->naive->seq_interval(e);
}

std::vector<sf_item_shape> split_findmin::sequence_shape(int e) const {
  check_elem(e, impl_->n);
  std::vector<sf_item_shape> out;
  if (impl_->core)
    impl_->core->shape(e, out);
  else if (impl_->star)
    impl_->star->shape(e, out);
  else
    impl_->naive->shape(e, out);
  return out;
}

void split_findmin::audit() const {
  if (impl_->core)
    impl_->core->audit();
  else if (impl_->star)
    impl_->star->audit();
  else
    impl_->naive->audit();
}

}  // namespace mstsens
