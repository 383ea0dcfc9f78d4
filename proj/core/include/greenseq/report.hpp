#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "greenseq/count.hpp"
#include "greenseq/hasse.hpp"
#include "greenseq/oracle.hpp"

namespace greenseq {

struct PhaseTimings {
  double catalog_seconds = 0;
  double prec_seconds = 0;
  double hasse_seconds = 0;
  double count_seconds = 0;
};

// catalog -> prec table -> Hasse BFS -> pruned finite part.
struct PipelineResult {
  Catalog catalog;
  PrecTable table;
  HasseGraph hasse_raw;
  HasseGraph hasse_fin;
};

PipelineResult run_pipeline(const Quiver& q, PhaseTimings* timings = nullptr);

struct CountReport {
  std::string type;
  uint64_t hasse_vertices = 0;
  uint64_t hasse_arrows = 0;
  int vertex_count = 0;
  LengthDistribution dist;

  bool min_equals_vertex_count() const {
    return !dist.empty() && dist.min_length == vertex_count;
  }
};

CountReport run_count(const Quiver& q, PhaseTimings* timings = nullptr);

std::string to_json(const CountReport& report);
std::string to_tsv(const LengthDistribution& dist);

struct OrientationRun {
  uint32_t mask = 0;
  bool skipped = false;  // cyclic orientation
  int max_length = 0;
};

struct OrientationReport {
  int edge_count = 0;
  std::vector<OrientationRun> runs;
  bool all_equal = false;
  int max_length = 0;  // common value when all_equal
};

// Iterates every orientation of the underlying graph (bitmask over the arrow
// list; bit set = arrow reversed), skipping cyclic ones. Throws
// too_many_orientations above the edge cap.
OrientationReport run_all_orientations(const Quiver& q, int max_edges = 12);
std::string to_json(const OrientationReport& report);

struct CheckReport {
  std::string type;
  int max_len = 0;
  bool equal = false;
  LengthDistribution dp;
  LengthDistribution oracle;
};

// Counts via the Hasse pipeline, then replays the framed-quiver enumeration
// capped at the observed maximum (or an explicit cap) and compares exactly.
CheckReport run_oracle_check(const Quiver& q, std::optional<int> max_len = std::nullopt);
std::string to_json(const CheckReport& report);

std::string catalog_to_json(const Catalog& cat);
std::string oracle_to_json(const std::string& type, int max_len, const LengthDistribution& dist);

}  // namespace greenseq
