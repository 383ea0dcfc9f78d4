#pragma once

#include <cstdint>
#include <vector>

#include "greenseq/bignat.hpp"
#include "greenseq/hasse.hpp"

namespace greenseq {

// Exact path counts by length. counts[i] holds the number of maximal green
// sequences of length min_length + i; the first and last entries are nonzero.
struct LengthDistribution {
  int min_length = 0;
  std::vector<BigNat> counts;

  bool empty() const { return counts.empty(); }
  int max_length() const { return min_length + static_cast<int>(counts.size()) - 1; }
  const BigNat* at(int length) const {
    int idx = length - min_length;
    if (idx < 0 || idx >= static_cast<int>(counts.size())) return nullptr;
    return &counts[idx];
  }
  BigNat total() const;
  bool no_gap() const;  // no zero counts between min and max length

  bool operator==(const LengthDistribution&) const = default;
};

// Kahn's algorithm with ties broken by vertex index; the first element is the
// source and the last is the sink. Throws cycle_detected (internal).
std::vector<uint32_t> topo_sort(const HasseGraph& h);

// Level-by-level evaluation of PATH_s(v, l+1) = sum of PATH_s(u, l) over
// arrows u -> v, reading off the sink row. Exact.
LengthDistribution count_paths(const HasseGraph& h, const std::vector<uint32_t>& order);

}  // namespace greenseq
