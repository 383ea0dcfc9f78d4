#include "greenseq/count.hpp"

#include <algorithm>

namespace greenseq {

BigNat LengthDistribution::total() const {
  BigNat sum;
  for (const BigNat& c : counts) sum += c;
  return sum;
}

bool LengthDistribution::no_gap() const {
  return std::none_of(counts.begin(), counts.end(),
                      [](const BigNat& c) { return c.zero(); });
}

std::vector<uint32_t> topo_sort(const HasseGraph& h) {
  const uint32_t v = h.vertex_count();
  std::vector<uint32_t> in_degree(v, 0);
  for (const auto& e : h.edges) ++in_degree[e.second];

  std::vector<uint32_t> heap;
  for (uint32_t i = 0; i < v; ++i) {
    if (in_degree[i] == 0) heap.push_back(i);
  }
  std::make_heap(heap.begin(), heap.end(), std::greater<uint32_t>{});

  std::vector<uint32_t> order;
  order.reserve(v);
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), std::greater<uint32_t>{});
    uint32_t cur = heap.back();
    heap.pop_back();
    order.push_back(cur);
    for (uint32_t i = h.out_offsets[cur]; i < h.out_offsets[cur + 1]; ++i) {
      uint32_t next = h.out_targets[i];
      if (--in_degree[next] == 0) {
        heap.push_back(next);
        std::push_heap(heap.begin(), heap.end(), std::greater<uint32_t>{});
      }
    }
  }
  if (order.size() != v) fail(errc::cycle_detected, "Hasse graph is not acyclic");
  return order;
}

LengthDistribution count_paths(const HasseGraph& h, const std::vector<uint32_t>& order) {
  const uint32_t v = h.vertex_count();

  // Relabel by topological rank so each sweep walks memory forward.
  std::vector<uint32_t> rank(v);
  for (uint32_t pos = 0; pos < v; ++pos) rank[order[pos]] = pos;
  std::vector<uint32_t> offsets(v + 1, 0);
  for (const auto& e : h.edges) ++offsets[rank[e.first] + 1];
  for (uint32_t i = 0; i < v; ++i) offsets[i + 1] += offsets[i];
  std::vector<uint32_t> targets(h.edges.size());
  {
    std::vector<uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& e : h.edges) targets[cursor[rank[e.first]]++] = rank[e.second];
  }

  const uint32_t source = rank[h.source];
  const uint32_t sink = rank[h.sink];

  std::vector<BigNat> cur(v), next(v);
  cur[source] = BigNat(1);

  std::vector<BigNat> by_length;
  for (uint64_t level = 0;; ++level) {
    if (level > uint64_t(v) + 1) fail(errc::cycle_detected, "path lengths exceed vertex count");
    by_length.push_back(cur[sink]);
    bool alive = false;
    for (uint32_t r = 0; r < v; ++r) {
      if (cur[r].zero()) continue;
      alive = true;
      for (uint32_t i = offsets[r]; i < offsets[r + 1]; ++i) {
        next[targets[i]] += cur[r];
      }
      cur[r].reset();  // leaves cur all-zero, ready to swap in as the next level
    }
    if (!alive) break;
    std::swap(cur, next);
  }

  LengthDistribution dist;
  size_t first = 0;
  while (first < by_length.size() && by_length[first].zero()) ++first;
  size_t last = by_length.size();
  while (last > first && by_length[last - 1].zero()) --last;
  if (first == last) return dist;
  dist.min_length = static_cast<int>(first);
  dist.counts.assign(by_length.begin() + first, by_length.begin() + last);
  return dist;
}

}  // namespace greenseq
