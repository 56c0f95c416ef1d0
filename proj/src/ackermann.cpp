#include "mstsens/ackermann.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace mstsens {

namespace {

ack_value sat() { return {0, true}; }

ack_value mul_sat(ack_value a, ack_value b, std::uint64_t cap) {
  if (a.saturated || b.saturated) return sat();
  if (b.value != 0 && a.value > cap / b.value) return sat();
  return {a.value * b.value, false};
}

ack_value pow2_sat(std::int64_t j, std::uint64_t cap) {
  if (j >= 63) return sat();
  std::uint64_t v = std::uint64_t(1) << j;
  return v > cap ? sat() : ack_value{v, false};
}

// One row A(i, *), extended lazily.  Once a row saturates it stays
// saturated, so requests past the stored prefix are answered directly.
struct ack_row {
  std::vector<ack_value> vals;  // vals[j-1] = A(i, j)
  bool hit_cap = false;
};

ack_value row_get(std::vector<ack_row>& rows, int i, std::int64_t j,
                  std::uint64_t cap) {
  if (i == 1) return pow2_sat(j, cap);
  ack_row& row = rows[i - 2];
  if (row.vals.empty()) row.vals.push_back({2, false});  // A(i,1) = 2
  while (std::int64_t(row.vals.size()) < j && !row.hit_cap) {
    ack_value prev = row.vals.back();
    ack_value inner = prev.saturated
                          ? sat()
                          : row_get(rows, i - 1, std::int64_t(prev.value), cap);
    ack_value next = mul_sat(prev, inner, cap);
    if (next.saturated) row.hit_cap = true;
    row.vals.push_back(next);
  }
  if (std::int64_t(row.vals.size()) >= j) return row.vals[j - 1];
  return sat();
}

ack_value compute(int i, std::int64_t j, std::uint64_t cap,
                  std::vector<ack_row>& rows) {
  if (std::size_t(i) > rows.size() + 1) rows.resize(i - 1);
  return row_get(rows, i, j, cap);
}

}  // namespace

ack_value ackermann(int i, std::int64_t j, std::uint64_t cap) {
  if (i < 1 || j < 1) throw std::invalid_argument("ackermann: need i,j >= 1");
  if (cap == ack_default_cap) {
    static std::vector<ack_row> memo;
    return compute(i, j, cap, memo);
  }
  std::vector<ack_row> fresh;
  return compute(i, j, cap, fresh);
}

int ack_lambda(int i, std::uint64_t n) {
  if (i < 1) throw std::invalid_argument("ack_lambda: need i >= 1");
  for (int j = 1;; ++j) {
    if (ackermann(i, j).exceeds(n)) return j;
  }
}

int ack_alpha(std::uint64_t m, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("ack_alpha: need n >= 1");
  std::uint64_t col = (2 * n + m + n - 1) / n;  // ceil((2n+m)/n)
  for (int i = 1;; ++i) {
    if (ackermann(i, std::int64_t(col)).exceeds(n)) return i;
  }
}

}  // namespace mstsens
