#pragma once

#include <cstdint>

namespace mstsens {

// Value of the rapidly growing hierarchy below.  Anything above the cap
// collapses to "saturated", which compares greater than every input we
// could ever see; exact values are kept only while they fit.
struct ack_value {
  std::uint64_t value = 0;
  bool saturated = false;

  bool exceeds(std::uint64_t n) const { return saturated || value > n; }
  bool operator==(const ack_value&) const = default;
};

inline constexpr std::uint64_t ack_default_cap = std::uint64_t(1) << 62;

// A(1,j) = 2^j, A(i,1) = 2 for i > 1, A(i+1,j+1) = A(i+1,j) * A(i, A(i+1,j)).
// Rows are memoized (default cap only).  Throws std::invalid_argument for
// i < 1 or j < 1.
ack_value ackermann(int i, std::int64_t j, std::uint64_t cap = ack_default_cap);

// lambda_i(n): least j with A(i,j) > n.
int ack_lambda(int i, std::uint64_t n);

// alpha(m,n): least i with A(i, ceil((2n+m)/n)) > n.  Requires n >= 1.
int ack_alpha(std::uint64_t m, std::uint64_t n);

}  // namespace mstsens
