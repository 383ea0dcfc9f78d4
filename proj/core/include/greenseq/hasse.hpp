#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "greenseq/catalog.hpp"
#include "greenseq/prec.hpp"

namespace greenseq {

// A support tau-tilting module as its canonical form: the sorted sequence of
// catalog indices of its summands. Two modules are isomorphic exactly when
// the sequences are equal.
using TiltingSequence = std::vector<uint16_t>;

TiltingSequence top_module(const Catalog& cat);   // A = sum of all P_i
TiltingSequence zero_module(const Catalog& cat);  // 0 = sum of all P_i^-

struct HasseGraph {
  int modules_per_vertex = 0;
  std::vector<uint16_t> vertex_data;  // flat, modules_per_vertex entries per vertex
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  uint32_t source = 0;  // the module A
  uint32_t sink = 0;    // the module 0

  uint32_t vertex_count() const {
    return modules_per_vertex == 0
               ? 0
               : static_cast<uint32_t>(vertex_data.size() / modules_per_vertex);
  }
  uint64_t arrow_count() const { return edges.size(); }

  std::span<const uint16_t> sequence(uint32_t v) const {
    return {vertex_data.data() + size_t(v) * modules_per_vertex, size_t(modules_per_vertex)};
  }

  // Flat out-adjacency in edge order; built once after construction.
  std::vector<uint32_t> out_offsets, out_targets;
  void build_adjacency();
};

// Downward mutation at a position: the exchange exists inside the catalog and
// points down. Throws cardinality_violation if the completion set breaks the
// one-or-two guarantee.
std::optional<TiltingSequence> mutate(const TiltingSequence& t, int position,
                                      const PrecTable& table);

// Breadth-first construction of the Hasse quiver below A restricted to the
// catalog; deterministic vertex numbering by discovery order with positions
// tried in ascending order. Throws sink_unreachable if 0 never appears.
HasseGraph build_hasse(const Catalog& cat, const PrecTable& table);

// Keep exactly the vertices with a path to the sink, renumbering in the
// original discovery order.
HasseGraph prune_to_finite(const HasseGraph& h);

std::string emit_dot(const HasseGraph& h, const Catalog& cat);

}  // namespace greenseq
