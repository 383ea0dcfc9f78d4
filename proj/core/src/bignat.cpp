#include "greenseq/bignat.hpp"

#include <algorithm>
#include <stdexcept>

namespace greenseq {

BigNat& BigNat::operator+=(const BigNat& other) {
  if (other.limbs_.empty()) return *this;
  if (limbs_.size() < other.limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
  unsigned __int128 carry = 0;
  size_t i = 0;
  for (; i < other.limbs_.size(); ++i) {
    unsigned __int128 sum = carry + limbs_[i] + other.limbs_[i];
    limbs_[i] = static_cast<uint64_t>(sum);
    carry = sum >> 64;
  }
  for (; carry && i < limbs_.size(); ++i) {
    unsigned __int128 sum = carry + limbs_[i];
    limbs_[i] = static_cast<uint64_t>(sum);
    carry = sum >> 64;
  }
  if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
  return *this;
}

void BigNat::mul_add_small(uint64_t factor, uint64_t addend) {
  unsigned __int128 carry = addend;
  for (uint64_t& limb : limbs_) {
    unsigned __int128 prod = static_cast<unsigned __int128>(limb) * factor + carry;
    limb = static_cast<uint64_t>(prod);
    carry = prod >> 64;
  }
  while (carry) {
    limbs_.push_back(static_cast<uint64_t>(carry));
    carry >>= 64;
  }
}

BigNat BigNat::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  BigNat out;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("invalid decimal digit");
    out.mul_add_small(10, static_cast<uint64_t>(ch - '0'));
  }
  return out;
}

std::string BigNat::to_decimal() const {
  if (limbs_.empty()) return "0";
  constexpr uint64_t kChunk = 10'000'000'000'000'000'000ull;  // 10^19
  std::vector<uint64_t> work(limbs_.rbegin(), limbs_.rend());  // big-endian
  std::string out;
  std::vector<std::string> chunks;
  while (!work.empty()) {
    unsigned __int128 rem = 0;
    for (uint64_t& limb : work) {
      unsigned __int128 cur = (rem << 64) | limb;
      limb = static_cast<uint64_t>(cur / kChunk);
      rem = cur % kChunk;
    }
    while (!work.empty() && work.front() == 0) work.erase(work.begin());
    chunks.push_back(std::to_string(static_cast<uint64_t>(rem)));
  }
  out = chunks.back();
  for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
    out += std::string(19 - it->size(), '0') + *it;
  }
  return out;
}

std::string BigNat::to_scientific(int significant) const {
  if (significant < 1) significant = 1;
  std::string digits = to_decimal();
  if (digits == "0") {
    std::string mant(static_cast<size_t>(significant), '0');
    std::string out = mant.substr(0, 1);
    if (significant > 1) out += "." + mant.substr(1);
    return out + " e+0";
  }
  int exponent = static_cast<int>(digits.size()) - 1;
  std::string mant;
  if (static_cast<int>(digits.size()) <= significant) {
    mant = digits + std::string(significant - digits.size(), '0');
  } else {
    mant = digits.substr(0, significant);
    std::string_view tail(digits.data() + significant, digits.size() - significant);
    // compare the dropped tail against one half at the cut position
    int cmp_half;  // -1 below, 0 exactly half, +1 above
    if (tail[0] > '5') {
      cmp_half = 1;
    } else if (tail[0] < '5') {
      cmp_half = -1;
    } else {
      cmp_half = 0;
      for (size_t i = 1; i < tail.size(); ++i) {
        if (tail[i] != '0') {
          cmp_half = 1;
          break;
        }
      }
    }
    bool round_up = cmp_half > 0 || (cmp_half == 0 && ((mant.back() - '0') % 2) != 0);
    if (round_up) {
      int pos = significant - 1;
      while (pos >= 0) {
        if (mant[pos] != '9') {
          ++mant[pos];
          break;
        }
        mant[pos] = '0';
        --pos;
      }
      if (pos < 0) {
        mant.insert(mant.begin(), '1');
        mant.pop_back();
        ++exponent;
      }
    }
  }
  std::string out = mant.substr(0, 1);
  if (significant > 1) out += "." + mant.substr(1);
  return out + " e+" + std::to_string(exponent);
}

}  // namespace greenseq
