#pragma once

#include <string>
#include <vector>

#include "greenseq/errors.hpp"

namespace greenseq {

struct Arrow {
  int source = 0;
  int target = 0;
  bool operator==(const Arrow&) const = default;
};

// Finite directed multigraph on vertices 0..vertex_count-1. Parallel arrows
// are allowed and kept in input order. Acyclicity and connectivity are not
// construction invariants; they are checked by validate_and_classify.
class Quiver {
public:
  Quiver(int vertex_count, std::vector<Arrow> arrows, std::string name = {});

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& name() const { return name_; }

  bool is_sink(int v) const;    // no outgoing arrows
  bool is_source(int v) const;  // no incoming arrows

  // Structural equality; the name is a label and does not participate.
  bool operator==(const Quiver& other) const {
    return vertex_count_ == other.vertex_count_ && arrows_ == other.arrows_;
  }

private:
  int vertex_count_;
  std::vector<Arrow> arrows_;
  std::string name_;
};

enum class QuiverFamily {
  a,
  d,
  e6,
  e7,
  e8,
  a_tilde,
  d_tilde,
  e6_tilde,
  e7_tilde,
  e8_tilde,
  unsupported,
};

struct QuiverClass {
  QuiverFamily family = QuiverFamily::unsupported;
  int n = 0;         // A_n / D_n / Dtilde_n index
  int a = 0, b = 0;  // Atilde cycle arrow counts, canonicalized a >= b >= 1

  bool supported() const { return family != QuiverFamily::unsupported; }
  bool rep_finite() const;
  bool tame() const;
  std::string display() const;  // preset-style: "A:3", "Atilde:2,1", "Etilde:8", ...
};

// Checks acyclicity and connectivity (throwing cyclic_quiver / disconnected),
// then matches the underlying graph against the ADE and extended ADE shapes.
// A wild underlying graph yields family == unsupported.
QuiverClass validate_and_classify(const Quiver& q);

Quiver opposite(const Quiver& q);
Quiver reflect(const Quiver& q, int vertex);  // throws not_sink_or_source

bool is_acyclic(const Quiver& q);
bool is_connected(const Quiver& q);

// Vertices ordered so every arrow goes forward; ties broken by vertex index.
// Throws cyclic_quiver.
std::vector<int> topological_vertex_order(const Quiver& q);

// Documented deterministic presets: A:n, D:n, E:6|7|8, Atilde:a,b, Dtilde:n,
// Etilde:6|7|8, Dtilde4-paper, Etilde8-paper. Throws unknown_preset.
Quiver make_preset(const std::string& name);
std::vector<std::string> preset_names();

// Quiver JSON: {"vertices": m, "arrows": [[s,t],...], "name": optional}.
Quiver quiver_from_json_text(const std::string& text);
Quiver quiver_from_json_file(const std::string& path);
std::string quiver_to_json_text(const Quiver& q);

}  // namespace greenseq
