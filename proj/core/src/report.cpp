#include "greenseq/report.hpp"

#include <chrono>

#include "json.hpp"

namespace greenseq {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

nlohmann::ordered_json counts_json(const LengthDistribution& dist) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (size_t i = 0; i < dist.counts.size(); ++i) {
    if (dist.counts[i].zero()) continue;
    counts[std::to_string(dist.min_length + static_cast<int>(i))] = dist.counts[i].to_decimal();
  }
  return counts;
}

}  // namespace

PipelineResult run_pipeline(const Quiver& q, PhaseTimings* timings) {
  auto t0 = std::chrono::steady_clock::now();
  Catalog catalog = make_catalog(q);
  if (timings) timings->catalog_seconds = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  PrecTable table = build_prec_table(catalog);
  if (timings) timings->prec_seconds = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  HasseGraph raw = build_hasse(catalog, table);
  HasseGraph fin = prune_to_finite(raw);
  if (timings) timings->hasse_seconds = seconds_since(t0);

  return PipelineResult{std::move(catalog), std::move(table), std::move(raw), std::move(fin)};
}

CountReport run_count(const Quiver& q, PhaseTimings* timings) {
  PipelineResult pipeline = run_pipeline(q, timings);
  auto t0 = std::chrono::steady_clock::now();
  std::vector<uint32_t> order = topo_sort(pipeline.hasse_fin);
  LengthDistribution dist = count_paths(pipeline.hasse_fin, order);
  if (timings) timings->count_seconds = seconds_since(t0);

  CountReport report;
  report.type = pipeline.catalog.cls().display();
  report.hasse_vertices = pipeline.hasse_fin.vertex_count();
  report.hasse_arrows = pipeline.hasse_fin.arrow_count();
  report.vertex_count = q.vertex_count();
  report.dist = std::move(dist);
  return report;
}

std::string to_json(const CountReport& report) {
  nlohmann::ordered_json j;
  j["type"] = report.type;
  j["hasse"] = {{"vertices", report.hasse_vertices}, {"arrows", report.hasse_arrows}};
  j["counts"] = counts_json(report.dist);
  BigNat total = report.dist.total();
  j["total"] = total.to_decimal();
  j["total_sci"] = total.to_scientific(4);
  j["min_length"] = report.dist.min_length;
  j["max_length"] = report.dist.max_length();
  j["no_gap"] = report.dist.no_gap();
  j["vertex_count"] = report.vertex_count;
  j["min_equals_vertex_count"] = report.min_equals_vertex_count();
  return j.dump(2) + "\n";
}

std::string to_tsv(const LengthDistribution& dist) {
  std::string out;
  for (size_t i = 0; i < dist.counts.size(); ++i) {
    if (dist.counts[i].zero()) continue;
    out += std::to_string(dist.min_length + static_cast<int>(i));
    out += '\t';
    out += dist.counts[i].to_decimal();
    out += '\n';
  }
  return out;
}

OrientationReport run_all_orientations(const Quiver& q, int max_edges) {
  const int e = static_cast<int>(q.arrows().size());
  if (e > max_edges) {
    fail(errc::too_many_orientations,
         std::to_string(e) + " edges exceed the sweep cap of " + std::to_string(max_edges));
  }
  OrientationReport report;
  report.edge_count = e;
  bool first = true;
  bool all_equal = true;
  int common = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << e); ++mask) {
    std::vector<Arrow> arrows = q.arrows();
    for (int i = 0; i < e; ++i) {
      if (mask & (uint32_t{1} << i)) std::swap(arrows[i].source, arrows[i].target);
    }
    Quiver oriented(q.vertex_count(), std::move(arrows));
    OrientationRun run;
    run.mask = mask;
    if (!is_acyclic(oriented)) {
      run.skipped = true;
    } else {
      CountReport count = run_count(oriented);
      run.max_length = count.dist.max_length();
      if (first) {
        common = run.max_length;
        first = false;
      } else if (run.max_length != common) {
        all_equal = false;
      }
    }
    report.runs.push_back(run);
  }
  report.all_equal = all_equal;
  report.max_length = common;
  return report;
}

std::string to_json(const OrientationReport& report) {
  nlohmann::ordered_json j;
  j["edges"] = report.edge_count;
  auto runs = nlohmann::ordered_json::array();
  for (const OrientationRun& run : report.runs) {
    nlohmann::ordered_json r;
    r["mask"] = run.mask;
    if (run.skipped) {
      r["skipped"] = true;
    } else {
      r["max_length"] = run.max_length;
    }
    runs.push_back(std::move(r));
  }
  j["orientations"] = std::move(runs);
  j["all_equal"] = report.all_equal;
  j["max_length"] = report.max_length;
  return j.dump(2) + "\n";
}

CheckReport run_oracle_check(const Quiver& q, std::optional<int> max_len) {
  CountReport dp = run_count(q);
  CheckReport report;
  report.type = dp.type;
  report.max_len = max_len.value_or(dp.dist.max_length());
  report.dp = std::move(dp.dist);
  report.oracle = enumerate_mgs(q, report.max_len);
  report.equal = report.dp == report.oracle;
  return report;
}

std::string to_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["type"] = report.type;
  j["max_len"] = report.max_len;
  j["equal"] = report.equal;
  j["dp_counts"] = counts_json(report.dp);
  j["oracle_counts"] = counts_json(report.oracle);
  return j.dump(2) + "\n";
}

std::string catalog_to_json(const Catalog& cat) {
  nlohmann::ordered_json j;
  j["type"] = cat.cls().display();
  j["vertex_count"] = cat.vertex_count();
  j["lambda_size"] = cat.size();
  j["num_nonsincere"] = cat.nonsincere().size();
  j["m"] = cat.m_thresh();
  j["p"] = cat.p();
  j["q"] = cat.q();
  auto triples = nlohmann::ordered_json::array();
  for (int i = 0; i < cat.size(); ++i) {
    const ModuleTriple& t = cat.triple(i);
    nlohmann::ordered_json entry;
    entry["triple"] = {t.a, t.b, t.c};
    entry["dim"] = cat.dim(i);
    triples.push_back(std::move(entry));
  }
  j["modules"] = std::move(triples);
  return j.dump(2) + "\n";
}

std::string oracle_to_json(const std::string& type, int max_len, const LengthDistribution& dist) {
  nlohmann::ordered_json j;
  j["type"] = type;
  j["max_len"] = max_len;
  j["counts"] = counts_json(dist);
  j["total"] = dist.total().to_decimal();
  return j.dump(2) + "\n";
}

}  // namespace greenseq
