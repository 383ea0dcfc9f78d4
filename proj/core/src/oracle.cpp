#include "greenseq/oracle.hpp"

#include <algorithm>

namespace greenseq {

IceQuiver IceQuiver::framed(const Quiver& q) {
  IceQuiver ice;
  ice.n_ = q.vertex_count();
  ice.b_.assign(size_t(2 * ice.n_) * 2 * ice.n_, 0);
  for (const Arrow& a : q.arrows()) {
    ice.at(a.source, a.target) += 1;
    ice.at(a.target, a.source) -= 1;
  }
  for (int i = 0; i < ice.n_; ++i) {
    ice.at(i, ice.n_ + i) = 1;
    ice.at(ice.n_ + i, i) = -1;
  }
  return ice;
}

void IceQuiver::mutate(int k) {
  // b'(x,y) = b(x,y) + sgn(b(x,k)) * max(0, b(x,k) b(k,y)) for x,y != k,
  // then row and column k flip sign. The bumps only read row/column k, so
  // they can be applied in place before the flip.
  const int size = 2 * n_;
  for (int x = 0; x < size; ++x) {
    if (x == k) continue;
    const int32_t xk = b(x, k);
    if (xk == 0) continue;
    for (int y = 0; y < size; ++y) {
      if (y == k) continue;
      const int32_t prod = xk * b(k, y);
      if (prod > 0) at(x, y) += xk > 0 ? prod : -prod;
    }
  }
  for (int x = 0; x < size; ++x) {
    at(x, k) = -b(x, k);
    at(k, x) = -b(k, x);
  }
  // drop arrows between frozen vertices
  for (int x = n_; x < size; ++x) {
    for (int y = n_; y < size; ++y) at(x, y) = 0;
  }
}

bool IceQuiver::is_green(int i) const {
  bool incoming = false, outgoing = false;
  for (int f = n_; f < 2 * n_; ++f) {
    if (b(f, i) > 0) incoming = true;
    if (b(i, f) > 0) outgoing = true;
  }
  if (incoming && outgoing) {
    fail(errc::sign_incoherence, "vertex is neither green nor red");
  }
  return !incoming;
}

std::vector<int> IceQuiver::green_vertices() const {
  std::vector<int> greens;
  for (int i = 0; i < n_; ++i) {
    if (is_green(i)) greens.push_back(i);
  }
  return greens;
}

namespace {

// At a terminal seed the frozen arrows must form a permutation c(i) -> s(i)
// and the mutable block must be the original quiver transported along s.
void verify_terminal(const IceQuiver& ice, const IceQuiver& start) {
  const int n = ice.mutable_count();
  std::vector<int> sigma(n, -1);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int32_t v = ice.b(n + i, j);
      if (v == 0) continue;
      if (v != 1 || sigma[i] != -1) {
        fail(errc::internal, "terminal seed is not a coframed quiver");
      }
      sigma[i] = j;
    }
    if (sigma[i] < 0 || hit[sigma[i]]) {
      fail(errc::internal, "terminal seed is not a coframed quiver");
    }
    hit[sigma[i]] = true;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (ice.b(sigma[i], sigma[j]) != start.b(i, j)) {
        fail(errc::internal, "terminal seed is not a coframed quiver");
      }
    }
  }
}

struct Search {
  IceQuiver seed;
  IceQuiver start;
  int max_len = 0;
  std::vector<BigNat> by_length;  // index = sequence length

  void run(int depth) {
    std::vector<int> greens = seed.green_vertices();
    if (greens.empty()) {
      verify_terminal(seed, start);
      by_length[depth] += BigNat(1);
      return;
    }
    if (depth == max_len) return;  // abandoned, uncounted
    for (int k : greens) {
      seed.mutate(k);
      run(depth + 1);
      seed.mutate(k);  // mutation is involutive
    }
  }
};

}  // namespace

LengthDistribution enumerate_mgs(const Quiver& q, int max_len) {
  if (max_len < q.vertex_count()) {
    fail(errc::parse_error, "max_len must be at least the number of vertices");
  }
  Search search;
  search.seed = IceQuiver::framed(q);
  search.start = search.seed;
  search.max_len = max_len;
  search.by_length.assign(max_len + 1, BigNat{});
  search.run(0);

  LengthDistribution dist;
  size_t first = 0;
  while (first < search.by_length.size() && search.by_length[first].zero()) ++first;
  size_t last = search.by_length.size();
  while (last > first && search.by_length[last - 1].zero()) --last;
  if (first == last) return dist;
  dist.min_length = static_cast<int>(first);
  dist.counts.assign(search.by_length.begin() + first, search.by_length.begin() + last);
  return dist;
}

}  // namespace greenseq
