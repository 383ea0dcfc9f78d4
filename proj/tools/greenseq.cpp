// greenseq: counts maximal green sequences of Dynkin and extended Dynkin
// quivers by length, via the finite Hasse quiver of support tau-tilting
// modules. See README.md for the subcommand reference.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "greenseq/count.hpp"
#include "greenseq/hasse.hpp"
#include "greenseq/oracle.hpp"
#include "greenseq/prec.hpp"
#include "greenseq/report.hpp"

namespace {

using namespace greenseq;

struct CommonOptions {
  std::string quiver_file;
  std::string preset;
  std::string format = "json";
  std::string out_path;
  int threads = 1;
  bool stats = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_format = true) {
  auto* file = cmd->add_option("--quiver", opt.quiver_file, "Quiver JSON file");
  auto* preset = cmd->add_option("--preset", opt.preset, "Preset name (e.g. A:3, Dtilde:4)");
  file->excludes(preset);
  preset->excludes(file);
  if (with_format) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv", "dot"}));
  }
  cmd->add_option("--out", opt.out_path, "Write the payload to this file instead of stdout");
  cmd->add_option("--threads", opt.threads, "Worker threads (results never depend on it)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--stats", opt.stats, "Print phase timings to stderr");
}

Quiver load_quiver(const CommonOptions& opt) {
  if (!opt.quiver_file.empty()) return quiver_from_json_file(opt.quiver_file);
  if (!opt.preset.empty()) return make_preset(opt.preset);
  fail(errc::parse_error, "exactly one of --quiver or --preset is required");
}

void write_payload(const CommonOptions& opt, const std::string& payload) {
  if (opt.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot open output file '" + opt.out_path + "'");
  out << payload;
}

void print_stats(const CommonOptions& opt, const PhaseTimings& timings) {
  if (!opt.stats) return;
  std::cerr << "[stats] catalog: " << timings.catalog_seconds << "s\n"
            << "[stats] prec:    " << timings.prec_seconds << "s\n"
            << "[stats] hasse:   " << timings.hasse_seconds << "s\n"
            << "[stats] count:   " << timings.count_seconds << "s\n";
}

int cmd_count(const CommonOptions& opt) {
  Quiver q = load_quiver(opt);
  PhaseTimings timings;
  CountReport report = run_count(q, &timings);
  print_stats(opt, timings);
  if (opt.format == "tsv") {
    write_payload(opt, to_tsv(report.dist));
  } else if (opt.format == "json") {
    write_payload(opt, to_json(report));
  } else {
    fail(errc::parse_error, "count supports --format json|tsv");
  }
  return 0;
}

int cmd_hasse(const CommonOptions& opt, const std::string& emit_dot_path) {
  Quiver q = load_quiver(opt);
  PhaseTimings timings;
  PipelineResult pipeline = run_pipeline(q, &timings);
  print_stats(opt, timings);
  if (!emit_dot_path.empty()) {
    std::ofstream out(emit_dot_path, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot open output file '" + emit_dot_path + "'");
    out << emit_dot(pipeline.hasse_fin, pipeline.catalog);
  }
  if (opt.format == "dot") {
    write_payload(opt, emit_dot(pipeline.hasse_fin, pipeline.catalog));
    return 0;
  }
  if (opt.format != "json") fail(errc::parse_error, "hasse supports --format json|dot");
  std::string payload = "{\"vertices\": " + std::to_string(pipeline.hasse_fin.vertex_count()) +
                        ", \"arrows\": " + std::to_string(pipeline.hasse_fin.arrow_count()) +
                        "}\n";
  write_payload(opt, payload);
  return 0;
}

int cmd_catalog(const CommonOptions& opt) {
  Quiver q = load_quiver(opt);
  Catalog cat = make_catalog(q);
  write_payload(opt, catalog_to_json(cat));
  return 0;
}

int cmd_prec(const CommonOptions& opt, const std::string& x_text, const std::string& y_text) {
  Quiver q = load_quiver(opt);
  Catalog cat = make_catalog(q);
  auto x = parse_triple(x_text);
  auto y = parse_triple(y_text);
  if (!x || !y) fail(errc::parse_error, "triples must look like (a,b,c)");
  if (cat.index_of(*x) < 0) {
    fail(errc::triple_not_in_catalog, to_string(*x) + " is not in the catalog");
  }
  if (cat.index_of(*y) < 0) {
    fail(errc::triple_not_in_catalog, to_string(*y) + " is not in the catalog");
  }
  std::string branch;
  bool result = prec(*x, *y, cat, &branch);
  std::string payload = "prec(" + to_string(*x) + ", " + to_string(*y) + ") = " +
                        (result ? "true" : "false") + " [branch: " + branch + "]\n";
  write_payload(opt, payload);
  return 0;
}

int cmd_oracle(const CommonOptions& opt, int max_len) {
  Quiver q = load_quiver(opt);
  QuiverClass cls = validate_and_classify(q);
  LengthDistribution dist = enumerate_mgs(q, max_len);
  if (opt.format == "tsv") {
    write_payload(opt, to_tsv(dist));
  } else {
    write_payload(opt, oracle_to_json(cls.display(), max_len, dist));
  }
  return 0;
}

int cmd_orientations(const CommonOptions& opt) {
  Quiver q = load_quiver(opt);
  OrientationReport report = run_all_orientations(q);
  if (opt.format == "tsv") {
    std::string payload;
    for (const OrientationRun& run : report.runs) {
      payload += std::to_string(run.mask);
      payload += '\t';
      payload += run.skipped ? "skipped" : std::to_string(run.max_length);
      payload += '\n';
    }
    write_payload(opt, payload);
  } else {
    write_payload(opt, to_json(report));
  }
  return 0;
}

int cmd_check(const CommonOptions& opt, std::optional<int> max_len) {
  Quiver q = load_quiver(opt);
  CheckReport report = run_oracle_check(q, max_len);
  write_payload(opt, to_json(report));
  if (!report.equal) {
    std::cerr << "MismatchFound: oracle and pipeline distributions differ\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal green sequence counter for tame quivers"};
  app.require_subcommand(1);

  CommonOptions count_opt, hasse_opt, catalog_opt, prec_opt, oracle_opt, orient_opt, check_opt;
  std::string emit_dot_path, prec_x, prec_y;
  int oracle_max_len = 0;
  int check_max_len = -1;

  CLI::App* count_cmd = app.add_subcommand("count", "Count maximal green sequences by length");
  add_common(count_cmd, count_opt);

  CLI::App* hasse_cmd = app.add_subcommand("hasse", "Build the finite Hasse quiver");
  add_common(hasse_cmd, hasse_opt);
  hasse_cmd->add_option("--emit-dot", emit_dot_path, "Also write a DOT rendering to this file");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "Dump the candidate module catalog");
  add_common(catalog_cmd, catalog_opt);

  CLI::App* prec_cmd = app.add_subcommand("prec", "Evaluate the comparison on two triples");
  add_common(prec_cmd, prec_opt, /*with_format=*/false);
  prec_cmd->add_option("--x", prec_x, "First triple (a,b,c)")->required();
  prec_cmd->add_option("--y", prec_y, "Second triple (a,b,c)")->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Enumerate green sequences by DFS");
  add_common(oracle_cmd, oracle_opt);
  oracle_cmd->add_option("--max-len", oracle_max_len, "Abandon branches beyond this length")
      ->required();

  CLI::App* orient_cmd =
      app.add_subcommand("orientations", "Sweep all orientations of the underlying graph");
  add_common(orient_cmd, orient_opt);

  CLI::App* check_cmd =
      app.add_subcommand("check", "Cross-check the pipeline against the DFS enumeration");
  add_common(check_cmd, check_opt);
  check_cmd->add_option("--max-len", check_max_len, "Cap for the DFS (default: observed maximum)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(count_opt);
    if (hasse_cmd->parsed()) return cmd_hasse(hasse_opt, emit_dot_path);
    if (catalog_cmd->parsed()) return cmd_catalog(catalog_opt);
    if (prec_cmd->parsed()) return cmd_prec(prec_opt, prec_x, prec_y);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_opt, oracle_max_len);
    if (orient_cmd->parsed()) return cmd_orientations(orient_opt);
    if (check_cmd->parsed()) {
      std::optional<int> cap;
      if (check_max_len >= 0) cap = check_max_len;
      return cmd_check(check_opt, cap);
    }
  } catch (const greenseq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
