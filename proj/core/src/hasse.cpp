#include "greenseq/hasse.hpp"

#include <algorithm>
#include <bit>

namespace greenseq {

namespace {

// Open-addressing map from canonical sequences to vertex ids. Keys are read
// from the flat vertex array, so the table itself stores only ids.
class SeenTable {
public:
  SeenTable(const std::vector<uint16_t>& data, int stride)
      : data_(data), stride_(stride) {
    slots_.assign(1 << 16, kEmpty);
    mask_ = slots_.size() - 1;
  }

  static uint64_t hash(std::span<const uint16_t> key) {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint16_t v : key) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  int64_t find(std::span<const uint16_t> key) const {
    size_t slot = hash(key) & mask_;
    while (slots_[slot] != kEmpty) {
      if (equals(slots_[slot], key)) return slots_[slot];
      slot = (slot + 1) & mask_;
    }
    return -1;
  }

  void insert(uint32_t id) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::span<const uint16_t> key{data_.data() + size_t(id) * stride_, size_t(stride_)};
    size_t slot = hash(key) & mask_;
    while (slots_[slot] != kEmpty) slot = (slot + 1) & mask_;
    slots_[slot] = id;
    ++count_;
  }

private:
  static constexpr uint32_t kEmpty = 0xffffffffu;

  bool equals(uint32_t id, std::span<const uint16_t> key) const {
    const uint16_t* stored = data_.data() + size_t(id) * stride_;
    return std::equal(key.begin(), key.end(), stored);
  }

  void grow() {
    std::vector<uint32_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    mask_ = slots_.size() - 1;
    for (uint32_t id : old) {
      if (id == kEmpty) continue;
      std::span<const uint16_t> key{data_.data() + size_t(id) * stride_, size_t(stride_)};
      size_t slot = hash(key) & mask_;
      while (slots_[slot] != kEmpty) slot = (slot + 1) & mask_;
      slots_[slot] = id;
    }
  }

  const std::vector<uint16_t>& data_;
  int stride_;
  std::vector<uint32_t> slots_;
  size_t mask_ = 0;
  size_t count_ = 0;
};

void verify_pairwise(std::span<const uint16_t> seq, const PrecTable& table) {
  for (size_t i = 0; i < seq.size(); ++i) {
    for (size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j] || !table.coexist(seq[i], seq[j])) {
        fail(errc::internal, "vertex fails the pairwise compatibility check");
      }
    }
  }
}

// Census of a completion set M(T, j): how many members the intersection of
// the COEXIST rows has, and which member is not t[j] itself.
struct CompletionScan {
  int count = 0;
  int other = -1;
  bool contains_tj = false;
};

CompletionScan scan_completions(const uint64_t* row, int words, int size, uint16_t tj) {
  CompletionScan out;
  for (int w = 0; w < words; ++w) {
    uint64_t bits = row[w];
    while (bits) {
      int bitpos = std::countr_zero(bits);
      bits &= bits - 1;
      int idx = w * 64 + bitpos;
      if (idx >= size) break;
      ++out.count;
      if (idx == tj) {
        out.contains_tj = true;
      } else {
        out.other = idx;
      }
    }
  }
  return out;
}

TiltingSequence replace_sorted(std::span<const uint16_t> t, int position, uint16_t value) {
  TiltingSequence out(t.begin(), t.end());
  out.erase(out.begin() + position);
  out.insert(std::upper_bound(out.begin(), out.end(), value), value);
  return out;
}

}  // namespace

TiltingSequence top_module(const Catalog& cat) {
  TiltingSequence t;
  for (int i = 0; i < cat.vertex_count(); ++i) {
    int idx = cat.index_of({0, i, 0});
    if (idx < 0) fail(errc::internal, "projective missing from catalog");
    t.push_back(static_cast<uint16_t>(idx));
  }
  std::sort(t.begin(), t.end());
  return t;
}

TiltingSequence zero_module(const Catalog& cat) {
  TiltingSequence t;
  for (int i = 0; i < cat.vertex_count(); ++i) {
    int idx = cat.index_of({2, i, -1});
    if (idx < 0) fail(errc::internal, "shifted projective missing from catalog");
    t.push_back(static_cast<uint16_t>(idx));
  }
  std::sort(t.begin(), t.end());
  return t;
}

void HasseGraph::build_adjacency() {
  const uint32_t v = vertex_count();
  out_offsets.assign(v + 1, 0);
  for (const auto& e : edges) ++out_offsets[e.first + 1];
  for (uint32_t i = 0; i < v; ++i) out_offsets[i + 1] += out_offsets[i];
  out_targets.resize(edges.size());
  std::vector<uint32_t> cursor(out_offsets.begin(), out_offsets.end() - 1);
  for (const auto& e : edges) out_targets[cursor[e.first]++] = e.second;
}

std::optional<TiltingSequence> mutate(const TiltingSequence& t, int position,
                                      const PrecTable& table) {
  const int words = table.words_per_row();
  const int size = table.size();
  std::vector<uint64_t> acc(words, ~uint64_t{0});
  // clip the all-ones mask to the catalog size (empty intersections stay full)
  if (size % 64) acc[words - 1] = (uint64_t{1} << (size % 64)) - 1;
  for (size_t i = 0; i < t.size(); ++i) {
    if (static_cast<int>(i) == position) continue;
    auto row = table.coexist_row(t[i]);
    for (int w = 0; w < words; ++w) acc[w] &= row[w];
  }
  CompletionScan scan = scan_completions(acc.data(), words, size, t[position]);
  if (!scan.contains_tj || scan.count < 1 || scan.count > 2) {
    fail(errc::cardinality_violation,
         "completion set has " + std::to_string(scan.count) + " members");
  }
  if (scan.count == 1) return std::nullopt;
  if (!table.prec(scan.other, t[position])) return std::nullopt;  // upward exchange
  TiltingSequence out = replace_sorted(t, position, static_cast<uint16_t>(scan.other));
  verify_pairwise(out, table);
  return out;
}

HasseGraph build_hasse(const Catalog& cat, const PrecTable& table) {
  const int m = cat.vertex_count();
  const int words = table.words_per_row();
  const int size = table.size();

  HasseGraph h;
  h.modules_per_vertex = m;

  TiltingSequence start = top_module(cat);
  h.vertex_data.insert(h.vertex_data.end(), start.begin(), start.end());
  SeenTable seen(h.vertex_data, m);
  seen.insert(0);

  uint64_t full_tail = ~uint64_t{0};
  if (size % 64) full_tail = (uint64_t{1} << (size % 64)) - 1;

  // prefix[j] = AND of coexist rows of positions < j; suffix[j] = AND of
  // positions >= j. M(T, j) = prefix[j] & suffix[j+1].
  std::vector<uint64_t> prefix(size_t(m + 1) * words), suffix(size_t(m + 1) * words);
  std::vector<uint64_t> acc(words);
  TiltingSequence candidate;

  for (uint32_t v = 0; v < h.vertex_count(); ++v) {
    // the span must be re-read each round: vertex_data reallocates as it grows
    std::vector<uint16_t> t(h.sequence(v).begin(), h.sequence(v).end());

    for (int w = 0; w < words; ++w) prefix[w] = ~uint64_t{0};
    prefix[words - 1] = full_tail;
    for (int j = 0; j < m; ++j) {
      auto row = table.coexist_row(t[j]);
      for (int w = 0; w < words; ++w) {
        prefix[size_t(j + 1) * words + w] = prefix[size_t(j) * words + w] & row[w];
      }
    }
    for (int w = 0; w < words; ++w) suffix[size_t(m) * words + w] = ~uint64_t{0};
    suffix[size_t(m) * words + words - 1] = full_tail;
    for (int j = m - 1; j >= 0; --j) {
      auto row = table.coexist_row(t[j]);
      for (int w = 0; w < words; ++w) {
        suffix[size_t(j) * words + w] = suffix[size_t(j + 1) * words + w] & row[w];
      }
    }

    for (int j = 0; j < m; ++j) {
      for (int w = 0; w < words; ++w) {
        acc[w] = prefix[size_t(j) * words + w] & suffix[size_t(j + 1) * words + w];
      }
      CompletionScan scan = scan_completions(acc.data(), words, size, t[j]);
      if (!scan.contains_tj || scan.count < 1 || scan.count > 2) {
        fail(errc::cardinality_violation,
             "completion set has " + std::to_string(scan.count) + " members");
      }
      if (scan.count == 1) continue;
      if (!table.prec(scan.other, t[j])) continue;

      candidate = replace_sorted(t, j, static_cast<uint16_t>(scan.other));
      int64_t known = seen.find(candidate);
      if (known < 0) {
        verify_pairwise(candidate, table);
        uint32_t id = h.vertex_count();
        h.vertex_data.insert(h.vertex_data.end(), candidate.begin(), candidate.end());
        seen.insert(id);
        h.edges.emplace_back(v, id);
      } else {
        h.edges.emplace_back(v, static_cast<uint32_t>(known));
      }
    }
  }

  int64_t sink = seen.find(zero_module(cat));
  if (sink < 0) fail(errc::sink_unreachable, "the zero module never appeared");
  h.source = 0;
  h.sink = static_cast<uint32_t>(sink);
  h.build_adjacency();
  return h;
}

HasseGraph prune_to_finite(const HasseGraph& h) {
  const uint32_t v = h.vertex_count();
  std::vector<std::vector<uint32_t>> incoming(v);
  for (const auto& e : h.edges) incoming[e.second].push_back(e.first);

  std::vector<bool> keep(v, false);
  std::vector<uint32_t> stack{h.sink};
  keep[h.sink] = true;
  while (!stack.empty()) {
    uint32_t cur = stack.back();
    stack.pop_back();
    for (uint32_t from : incoming[cur]) {
      if (!keep[from]) {
        keep[from] = true;
        stack.push_back(from);
      }
    }
  }
  if (!keep[h.source]) fail(errc::internal, "source lost while pruning");

  std::vector<uint32_t> remap(v, 0);
  HasseGraph out;
  out.modules_per_vertex = h.modules_per_vertex;
  uint32_t next = 0;
  for (uint32_t i = 0; i < v; ++i) {
    if (!keep[i]) continue;
    remap[i] = next++;
    auto seq = h.sequence(i);
    out.vertex_data.insert(out.vertex_data.end(), seq.begin(), seq.end());
  }
  for (const auto& e : h.edges) {
    if (keep[e.first] && keep[e.second]) {
      out.edges.emplace_back(remap[e.first], remap[e.second]);
    }
  }
  out.source = remap[h.source];
  out.sink = remap[h.sink];
  out.build_adjacency();
  return out;
}

std::string emit_dot(const HasseGraph& h, const Catalog& cat) {
  std::string dot = "digraph hasse {\n";
  for (uint32_t v = 0; v < h.vertex_count(); ++v) {
    dot += "  n" + std::to_string(v) + " [label=\"";
    auto seq = h.sequence(v);
    for (size_t i = 0; i < seq.size(); ++i) {
      if (i) dot += " ";
      dot += to_string(cat.triple(seq[i]));
    }
    dot += "\"];\n";
  }
  for (const auto& e : h.edges) {
    dot += "  n" + std::to_string(e.first) + " -> n" + std::to_string(e.second) + ";\n";
  }
  dot += "}\n";
  return dot;
}

}  // namespace greenseq
