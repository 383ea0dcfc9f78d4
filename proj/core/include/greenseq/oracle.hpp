#pragma once

#include <cstdint>
#include <vector>

#include "greenseq/count.hpp"
#include "greenseq/quiver.hpp"

namespace greenseq {

// Framed exchange matrix: 2m x 2m skew-symmetric with mutable vertices
// 0..m-1 and frozen copies m..2m-1; entry b(x,y) > 0 means b(x,y) arrows
// x -> y. Arrows between frozen vertices are discarded after every mutation.
class IceQuiver {
public:
  static IceQuiver framed(const Quiver& q);

  int mutable_count() const { return n_; }
  int32_t b(int x, int y) const { return b_[size_t(x) * 2 * n_ + y]; }

  // Standard exchange-matrix mutation at a mutable vertex; involutive.
  void mutate(int k);

  // i is green when no frozen vertex has an arrow into i. Every vertex must
  // be green or red; a frozen column with both signs throws sign_incoherence.
  bool is_green(int i) const;
  std::vector<int> green_vertices() const;

private:
  int32_t& at(int x, int y) { return b_[size_t(x) * 2 * n_ + y]; }
  int n_ = 0;
  std::vector<int32_t> b_;
};

// Depth-first enumeration of all green sequences that terminate within
// max_len mutations; longer branches are abandoned uncounted. Sound whenever
// max_len is at least the maximal green-sequence length. Terminal seeds are
// checked to be the coframed quiver up to a mutable-vertex permutation.
LengthDistribution enumerate_mgs(const Quiver& q, int max_len);

}  // namespace greenseq
