#include <algorithm>

#include "doctest.h"
#include "greenseq/hasse.hpp"

using namespace greenseq;

namespace {

struct Pipeline {
  Catalog cat;
  PrecTable table;
  Pipeline(const char* preset)
      : cat(make_catalog(make_preset(preset))), table(build_prec_table(cat)) {}
};

TiltingSequence from_triples(const Catalog& cat, std::vector<ModuleTriple> triples) {
  TiltingSequence t;
  for (const ModuleTriple& m : triples) t.push_back(static_cast<uint16_t>(cat.index_of(m)));
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

TEST_CASE("the zero module admits no downward mutation") {
  for (const char* preset : {"A:3", "Dtilde4-paper", "Atilde:2,1"}) {
    Pipeline p(preset);
    TiltingSequence zero = zero_module(p.cat);
    for (int j = 0; j < p.cat.vertex_count(); ++j) {
      CHECK(!mutate(zero, j, p.table).has_value());
    }
  }
}

TEST_CASE("sink-vertex exchange on the extended D4 quiver") {
  Pipeline p("Dtilde4-paper");
  TiltingSequence a = top_module(p.cat);
  auto mutated = mutate(a, 3, p.table);
  REQUIRE(mutated.has_value());
  CHECK(*mutated == from_triples(p.cat, {{0, 0, 0}, {0, 1, 0}, {0, 2, 0}, {0, 3, 1}, {0, 4, 0}}));
  // reversing the same exchange points upward
  CHECK(!mutate(*mutated, 3, p.table).has_value());
}

TEST_CASE("hasse graph of a single vertex") {
  Pipeline p("A:1");
  HasseGraph h = build_hasse(p.cat, p.table);
  CHECK(h.vertex_count() == 2);
  CHECK(h.arrow_count() == 1);
  CHECK(h.source == 0);
  CHECK(h.sink == 1);
  HasseGraph fin = prune_to_finite(h);
  CHECK(fin.vertex_count() == 2);
  CHECK(fin.arrow_count() == 1);
}

TEST_CASE("extended D4 reproduces the published graph size") {
  Pipeline p("Dtilde4-paper");
  HasseGraph raw = build_hasse(p.cat, p.table);
  CHECK(raw.vertex_count() == 320);  // regression constant (pre-prune)
  CHECK(raw.arrow_count() == 760);   // regression constant (pre-prune)
  HasseGraph fin = prune_to_finite(raw);
  CHECK(fin.vertex_count() == 314);
  CHECK(fin.arrow_count() == 743);

  // the source has no incoming arrows and the sink no outgoing ones
  int out_s = 0, in_t = 0;
  for (const auto& e : fin.edges) {
    CHECK(e.second != fin.source);
    CHECK(e.first != fin.sink);
    if (e.first == fin.source) ++out_s;
    if (e.second == fin.sink) ++in_t;
  }
  CHECK(out_s == 5);
  CHECK(in_t == 5);
}

TEST_CASE("mutation antisymmetry across every edge of the finite part") {
  Pipeline p("Dtilde4-paper");
  HasseGraph fin = prune_to_finite(build_hasse(p.cat, p.table));
  for (const auto& e : fin.edges) {
    auto upper = fin.sequence(e.first);
    auto lower = fin.sequence(e.second);
    // locate the replaced position in the lower endpoint
    int changed = -1;
    for (size_t j = 0; j < lower.size(); ++j) {
      if (std::find(upper.begin(), upper.end(), lower[j]) == upper.end()) {
        changed = static_cast<int>(j);
        break;
      }
    }
    REQUIRE(changed >= 0);
    TiltingSequence lower_seq(lower.begin(), lower.end());
    CHECK(!mutate(lower_seq, changed, p.table).has_value());
  }
}

TEST_CASE("rebuilds are bit-identical") {
  Pipeline p("Dtilde:5");
  HasseGraph a = prune_to_finite(build_hasse(p.cat, p.table));
  HasseGraph b = prune_to_finite(build_hasse(p.cat, p.table));
  CHECK(a.vertex_data == b.vertex_data);
  CHECK(a.edges == b.edges);
  CHECK(a.source == b.source);
  CHECK(a.sink == b.sink);
}

TEST_CASE("pruning drops exactly the vertices that cannot reach the sink") {
  // synthetic: s -> a (dead end), s -> b -> t
  HasseGraph h;
  h.modules_per_vertex = 1;
  h.vertex_data = {0, 1, 2, 3};  // s, a, b, t
  h.edges = {{0, 1}, {0, 2}, {2, 3}};
  h.source = 0;
  h.sink = 3;
  h.build_adjacency();
  HasseGraph fin = prune_to_finite(h);
  CHECK(fin.vertex_count() == 3);
  CHECK(fin.vertex_data == std::vector<uint16_t>{0, 2, 3});
  CHECK(fin.edges == std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}});
  CHECK(fin.sink == 2);
}

TEST_CASE("pruning is the identity on rep-finite posets") {
  for (const char* preset : {"A:1", "A:2", "A:3", "A:4", "D:4"}) {
    Pipeline p(preset);
    HasseGraph raw = build_hasse(p.cat, p.table);
    HasseGraph fin = prune_to_finite(raw);
    CHECK(raw.vertex_data == fin.vertex_data);
    CHECK(raw.edges == fin.edges);
  }
}

TEST_CASE("every vertex of the graph is pairwise compatible") {
  Pipeline p("Atilde:2,2");
  HasseGraph fin = prune_to_finite(build_hasse(p.cat, p.table));
  for (uint32_t v = 0; v < fin.vertex_count(); ++v) {
    auto seq = fin.sequence(v);
    for (size_t i = 0; i < seq.size(); ++i) {
      for (size_t j = i + 1; j < seq.size(); ++j) {
        CHECK(p.table.coexist(seq[i], seq[j]));
      }
    }
  }
}

TEST_CASE("dot output is stable and one line per vertex") {
  Pipeline p("A:1");
  HasseGraph fin = prune_to_finite(build_hasse(p.cat, p.table));
  std::string dot = emit_dot(fin, p.cat);
  CHECK(dot ==
        "digraph hasse {\n"
        "  n0 [label=\"(0,0,0)\"];\n"
        "  n1 [label=\"(2,0,-1)\"];\n"
        "  n0 -> n1;\n"
        "}\n");
  CHECK(emit_dot(fin, p.cat) == dot);

  Pipeline d4("Dtilde4-paper");
  HasseGraph d4fin = prune_to_finite(build_hasse(d4.cat, d4.table));
  std::string big = emit_dot(d4fin, d4.cat);
  size_t node_lines = 0;
  for (size_t pos = big.find("[label="); pos != std::string::npos;
       pos = big.find("[label=", pos + 1)) {
    ++node_lines;
  }
  CHECK(node_lines == 314);
}
