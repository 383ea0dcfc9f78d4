#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace greenseq {

// Unbounded non-negative integer. The counting DP only ever adds, so the
// interface stays small: addition, comparison, decimal in/out, and the
// 4-significant-digit scientific rendering used in reports.
class BigNat {
public:
  BigNat() = default;
  explicit BigNat(uint64_t value) {
    if (value) limbs_.push_back(value);
  }

  bool zero() const { return limbs_.empty(); }
  void reset() { limbs_.clear(); }

  BigNat& operator+=(const BigNat& other);
  friend BigNat operator+(BigNat a, const BigNat& b) {
    a += b;
    return a;
  }

  bool operator==(const BigNat&) const = default;

  // *this = *this * factor + addend (for decimal parsing)
  void mul_add_small(uint64_t factor, uint64_t addend);

  static BigNat from_decimal(std::string_view text);
  std::string to_decimal() const;

  // Rounded to `significant` digits with round-half-even, rendered as
  // "d.ddd e+k". Zero renders as "0.000 e+0".
  std::string to_scientific(int significant = 4) const;

  const std::vector<uint64_t>& limbs() const { return limbs_; }

private:
  std::vector<uint64_t> limbs_;  // little-endian, no trailing zero limb
};

}  // namespace greenseq
