#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace mstsens {

// Totally ordered key with a distinguished +infinity.  Finite keys order
// lexicographically by (value, tie); tie carries an edge id so that equal
// weights still have a strict order.
struct sf_key {
  std::int64_t value = 0;
  std::int32_t tie = 0;
  bool inf = true;

  static sf_key infinite() { return {}; }
  static sf_key finite(std::int64_t v, std::int32_t t = 0) {
    return {v, t, false};
  }
  bool operator==(const sf_key&) const = default;
};

inline bool sf_key_less(const sf_key& a, const sf_key& b) {
  if (a.inf || b.inf) return !a.inf && b.inf;
  if (a.value != b.value) return a.value < b.value;
  return a.tie < b.tie;
}

enum class sf_op : int { init = 0, split = 1, findmin = 2, decreasekey = 3 };

// Every key comparison made by a structure passes through one of these.
struct comparison_counter {
  std::uint64_t total = 0;
  std::array<std::uint64_t, 4> by_op{};

  void count(sf_op op) {
    ++total;
    ++by_op[std::size_t(op)];
  }
  std::uint64_t of(sf_op op) const { return by_op[std::size_t(op)]; }
};

enum class sf_variant { naive, basis, recursive, star };

struct sf_options {
  sf_variant variant = sf_variant::recursive;
  // 0 selects max(1, alpha(expected_ops, n)) clamped to [1,4]; ignored by
  // the naive and basis variants.
  int level = 0;
  std::uint64_t expected_ops = 0;  // defaults to n when 0
  // decreasekey walks the element->...->sequence chain of cached minima; a
  // binary search over that nonincreasing chain needs ceil(log2(2i+2))
  // comparisons instead of 2i+1.  Applies to recursive and star.
  bool binary_search_decreasekey = true;
};

struct sf_findmin_result {
  sf_key k;
  int element;  // element attaining the minimum, -1 when all keys are +inf
};

// One item of a sequence's layout, exposed for tests and audits.
//   level > 0 : plateau of `blocks` blocks, each exactly `width` elements
//   level == 0: one basis block of `width` elements
//   level == -1: singleton
//   level == -2: loose run of `width` elements at a sequence end (star)
struct sf_item_shape {
  int level = 0;
  int blocks = 0;
  int width = 0;
  bool operator==(const sf_item_shape&) const = default;
};

// Maintains a partition of elements 0..n-1 into contiguous sequences under
// split, with findmin answered from cached minima (never a comparison) and
// decreasekey within the per-variant comparison budget.
class split_findmin {
 public:
  split_findmin(std::vector<sf_key> keys, sf_options opt = {});
  ~split_findmin();
  split_findmin(split_findmin&&) noexcept;
  split_findmin& operator=(split_findmin&&) noexcept;

  int size() const;
  int level() const;  // effective level; 1 for basis, 0 for naive

  // Splits the sequence holding e so that e starts the right half.  A split
  // at the first element of its sequence is a no-op.
  void split(int e);
  sf_findmin_result findmin(int e) const;
  void decreasekey(int e, sf_key w);

  const comparison_counter& comparisons() const;

  // Introspection; none of these perform counted comparisons.
  sf_key current_key(int e) const;
  std::pair<int, int> sequence_interval(int e) const;  // inclusive
  std::vector<sf_item_shape> sequence_shape(int e) const;

  // Walks every structural invariant (partition shapes, cached minima,
  // nesting-chain monotonicity); throws std::logic_error on violation.
  void audit() const;

 private:
  struct impl;
  std::unique_ptr<impl> impl_;
};

}  // namespace mstsens
