#include "greenseq/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace greenseq {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows, std::string name)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)), name_(std::move(name)) {
  if (vertex_count_ <= 0) {
    fail(errc::parse_error, "quiver must have at least one vertex");
  }
  for (const Arrow& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count_ || a.target < 0 || a.target >= vertex_count_) {
      fail(errc::parse_error, "arrow endpoint out of range");
    }
  }
}

bool Quiver::is_sink(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [v](const Arrow& a) { return a.source == v; });
}

bool Quiver::is_source(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [v](const Arrow& a) { return a.target == v; });
}

bool QuiverClass::rep_finite() const {
  switch (family) {
    case QuiverFamily::a:
    case QuiverFamily::d:
    case QuiverFamily::e6:
    case QuiverFamily::e7:
    case QuiverFamily::e8:
      return true;
    default:
      return false;
  }
}

bool QuiverClass::tame() const {
  switch (family) {
    case QuiverFamily::a_tilde:
    case QuiverFamily::d_tilde:
    case QuiverFamily::e6_tilde:
    case QuiverFamily::e7_tilde:
    case QuiverFamily::e8_tilde:
      return true;
    default:
      return false;
  }
}

std::string QuiverClass::display() const {
  switch (family) {
    case QuiverFamily::a: return "A:" + std::to_string(n);
    case QuiverFamily::d: return "D:" + std::to_string(n);
    case QuiverFamily::e6: return "E:6";
    case QuiverFamily::e7: return "E:7";
    case QuiverFamily::e8: return "E:8";
    case QuiverFamily::a_tilde:
      return "Atilde:" + std::to_string(a) + "," + std::to_string(b);
    case QuiverFamily::d_tilde: return "Dtilde:" + std::to_string(n);
    case QuiverFamily::e6_tilde: return "Etilde:6";
    case QuiverFamily::e7_tilde: return "Etilde:7";
    case QuiverFamily::e8_tilde: return "Etilde:8";
    case QuiverFamily::unsupported: return "unsupported";
  }
  return "unsupported";
}

std::vector<int> topological_vertex_order(const Quiver& q) {
  const int m = q.vertex_count();
  std::vector<int> in_degree(m, 0);
  std::vector<std::vector<int>> out(m);
  for (const Arrow& a : q.arrows()) {
    ++in_degree[a.target];
    out[a.source].push_back(a.target);
  }
  // min-index tie-break keeps the order canonical
  std::vector<int> ready;
  for (int v = 0; v < m; ++v) {
    if (in_degree[v] == 0) ready.push_back(v);
  }
  std::make_heap(ready.begin(), ready.end(), std::greater<int>{});
  std::vector<int> order;
  order.reserve(m);
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<int>{});
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : out[v]) {
      if (--in_degree[w] == 0) {
        ready.push_back(w);
        std::push_heap(ready.begin(), ready.end(), std::greater<int>{});
      }
    }
  }
  if (static_cast<int>(order.size()) != m) {
    fail(errc::cyclic_quiver, "directed cycle found");
  }
  return order;
}

bool is_acyclic(const Quiver& q) {
  try {
    topological_vertex_order(q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_connected(const Quiver& q) {
  const int m = q.vertex_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> find_stack;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int components = m;
  for (const Arrow& a : q.arrows()) {
    int ra = find(a.source), rb = find(a.target);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

namespace {

struct UnderlyingGraph {
  int m = 0;
  std::vector<std::pair<int, int>> edges;  // endpoints, input order
  std::vector<int> degree;
  std::vector<std::vector<int>> incident;  // vertex -> edge ids

  explicit UnderlyingGraph(const Quiver& q)
      : m(q.vertex_count()), degree(m, 0), incident(m) {
    for (const Arrow& a : q.arrows()) {
      int id = static_cast<int>(edges.size());
      edges.emplace_back(a.source, a.target);
      ++degree[a.source];
      ++degree[a.target];
      incident[a.source].push_back(id);
      if (a.target != a.source) incident[a.target].push_back(id);
    }
  }

  int other_end(int edge, int v) const {
    return edges[edge].first == v ? edges[edge].second : edges[edge].first;
  }
};

// Length of the path hanging off `branch` in direction of `next`; -1 if the
// walk runs into another branch vertex instead of a leaf.
int arm_length(const UnderlyingGraph& g, int branch, int first_edge) {
  int len = 0;
  int prev_edge = first_edge;
  int v = g.other_end(first_edge, branch);
  ++len;
  while (g.degree[v] == 2) {
    int next_edge = g.incident[v][0] == prev_edge ? g.incident[v][1] : g.incident[v][0];
    v = g.other_end(next_edge, v);
    prev_edge = next_edge;
    ++len;
  }
  return g.degree[v] == 1 ? len : -1;
}

QuiverClass classify_tree(const UnderlyingGraph& g) {
  QuiverClass cls;
  std::vector<int> branch_vertices;
  for (int v = 0; v < g.m; ++v) {
    if (g.degree[v] >= 3) branch_vertices.push_back(v);
  }
  if (branch_vertices.empty()) {
    cls.family = QuiverFamily::a;
    cls.n = g.m;
    return cls;
  }
  if (branch_vertices.size() == 1) {
    int v = branch_vertices[0];
    std::vector<int> arms;
    for (int e : g.incident[v]) {
      int len = arm_length(g, v, e);
      if (len < 0) return cls;  // unreachable for a tree with one branch vertex
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 4) {
      if (arms == std::vector<int>{1, 1, 1, 1}) {
        cls.family = QuiverFamily::d_tilde;
        cls.n = 4;
      }
      return cls;
    }
    if (arms.size() != 3) return cls;
    if (arms[0] == 1 && arms[1] == 1) {
      cls.family = QuiverFamily::d;
      cls.n = g.m;
    } else if (arms == std::vector<int>{1, 2, 2}) {
      cls.family = QuiverFamily::e6;
    } else if (arms == std::vector<int>{1, 2, 3}) {
      cls.family = QuiverFamily::e7;
    } else if (arms == std::vector<int>{1, 2, 4}) {
      cls.family = QuiverFamily::e8;
    } else if (arms == std::vector<int>{2, 2, 2}) {
      cls.family = QuiverFamily::e6_tilde;
    } else if (arms == std::vector<int>{1, 3, 3}) {
      cls.family = QuiverFamily::e7_tilde;
    } else if (arms == std::vector<int>{1, 2, 5}) {
      cls.family = QuiverFamily::e8_tilde;
    }
    return cls;
  }
  if (branch_vertices.size() == 2 && g.degree[branch_vertices[0]] == 3 &&
      g.degree[branch_vertices[1]] == 3) {
    // Dtilde_n for n >= 5: two forks, each carrying exactly two leaves,
    // joined by a path of degree-2 vertices.
    for (int v : branch_vertices) {
      int leaves = 0;
      for (int e : g.incident[v]) {
        if (g.degree[g.other_end(e, v)] == 1) ++leaves;
      }
      if (leaves != 2) return cls;
    }
    int leaf_count = 0;
    for (int v = 0; v < g.m; ++v) {
      if (g.degree[v] == 1) ++leaf_count;
      if (g.degree[v] > 3) return cls;
    }
    if (leaf_count != 4) return cls;
    cls.family = QuiverFamily::d_tilde;
    cls.n = g.m - 1;
  }
  return cls;
}

QuiverClass classify_cycle(const UnderlyingGraph& g) {
  QuiverClass cls;
  for (int v = 0; v < g.m; ++v) {
    if (g.degree[v] != 2) return cls;
  }
  // Walk the cycle once starting from vertex 0 and count arrows with and
  // against the traversal direction.
  int with = 0, against = 0;
  int v = 0;
  int edge = g.incident[0][0];
  for (int step = 0; step < static_cast<int>(g.edges.size()); ++step) {
    if (g.edges[edge].first == v) {
      ++with;
    } else {
      ++against;
    }
    int w = g.other_end(edge, v);
    edge = g.incident[w][0] == edge ? g.incident[w][1] : g.incident[w][0];
    v = w;
  }
  cls.family = QuiverFamily::a_tilde;
  cls.a = std::max(with, against);
  cls.b = std::min(with, against);
  cls.n = cls.a + cls.b - 1;
  return cls;
}

}  // namespace

QuiverClass validate_and_classify(const Quiver& q) {
  topological_vertex_order(q);  // throws cyclic_quiver (covers loops)
  if (!is_connected(q)) {
    fail(errc::disconnected, "underlying graph is not connected");
  }
  UnderlyingGraph g(q);
  const int m = q.vertex_count();
  const int e = static_cast<int>(g.edges.size());
  if (e == m - 1) return classify_tree(g);
  if (e == m) return classify_cycle(g);
  return QuiverClass{};
}

Quiver opposite(const Quiver& q) {
  std::vector<Arrow> reversed = q.arrows();
  for (Arrow& a : reversed) std::swap(a.source, a.target);
  return Quiver(q.vertex_count(), std::move(reversed), q.name());
}

Quiver reflect(const Quiver& q, int vertex) {
  if (vertex < 0 || vertex >= q.vertex_count()) {
    fail(errc::parse_error, "vertex out of range");
  }
  if (!q.is_sink(vertex) && !q.is_source(vertex)) {
    fail(errc::not_sink_or_source,
         "vertex " + std::to_string(vertex) + " is neither a sink nor a source");
  }
  std::vector<Arrow> arrows = q.arrows();
  for (Arrow& a : arrows) {
    if (a.source == vertex || a.target == vertex) std::swap(a.source, a.target);
  }
  return Quiver(q.vertex_count(), std::move(arrows), q.name());
}

namespace {

int parse_positive_int(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    int value = std::stoi(text, &pos);
    if (pos != text.size() || value <= 0) throw std::invalid_argument(what);
    return value;
  } catch (const std::exception&) {
    fail(errc::unknown_preset, "bad " + what + " in preset: '" + text + "'");
  }
}

Quiver preset_a(int n) {
  std::vector<Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(n, std::move(arrows), "A:" + std::to_string(n));
}

Quiver preset_d(int n) {
  std::vector<Arrow> arrows{{0, 2}, {1, 2}};
  for (int i = 2; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(n, std::move(arrows), "D:" + std::to_string(n));
}

Quiver preset_e(int n) {
  // chain 0 -> 1 -> ... -> n-2 with the extra vertex n-1 attached at 2
  std::vector<Arrow> arrows;
  for (int i = 0; i + 2 < n; ++i) arrows.push_back({i, i + 1});
  arrows.push_back({n - 1, 2});
  return Quiver(n, std::move(arrows), "E:" + std::to_string(n));
}

Quiver preset_a_tilde(int a, int b) {
  // Cycle on a+b vertices: a arrows clockwise 0 -> 1 -> ... -> a and b arrows
  // counterclockwise 0 -> a+b-1 -> ... -> a. For a = b = 1 this is the
  // Kronecker quiver with a doubled arrow.
  const int m = a + b;
  std::vector<Arrow> arrows;
  for (int i = 0; i < a; ++i) arrows.push_back({i, (i + 1) % m});
  arrows.push_back({0, m - 1});
  for (int j = m - 1; j > a; --j) arrows.push_back({j, j - 1});
  return Quiver(m, std::move(arrows), "Atilde:" + std::to_string(a) + "," + std::to_string(b));
}

Quiver preset_d_tilde(int n) {
  // Forks 0,1 -> 2 and n-1,n -> n-2 with the central path oriented toward 2.
  std::vector<Arrow> arrows{{0, 2}, {1, 2}};
  for (int k = 3; k <= n - 2; ++k) arrows.push_back({k, k - 1});
  arrows.push_back({n - 1, n - 2});
  arrows.push_back({n, n - 2});
  return Quiver(n + 1, std::move(arrows), "Dtilde:" + std::to_string(n));
}

Quiver preset_e6_tilde() {
  return Quiver(7, {{0, 1}, {1, 6}, {2, 3}, {3, 6}, {4, 5}, {5, 6}}, "Etilde:6");
}

Quiver preset_e7_tilde() {
  return Quiver(8, {{0, 1}, {1, 2}, {2, 3}, {6, 5}, {5, 4}, {4, 3}, {7, 3}}, "Etilde:7");
}

Quiver preset_e8_tilde() {
  return Quiver(9,
                {{3, 0}, {2, 1}, {2, 3}, {3, 4}, {5, 4}, {5, 6}, {7, 6}, {7, 8}},
                "Etilde:8");
}

Quiver preset_d_tilde4_alt() {
  return Quiver(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}}, "Dtilde4-paper");
}

}  // namespace

Quiver make_preset(const std::string& name) {
  if (name == "Dtilde4-paper") return preset_d_tilde4_alt();
  if (name == "Etilde8-paper") {
    Quiver q = preset_e8_tilde();
    return Quiver(q.vertex_count(), q.arrows(), "Etilde8-paper");
  }
  auto colon = name.find(':');
  if (colon == std::string::npos) {
    fail(errc::unknown_preset, "unknown preset '" + name + "'");
  }
  const std::string family = name.substr(0, colon);
  const std::string params = name.substr(colon + 1);
  if (family == "A") {
    return preset_a(parse_positive_int(params, "n"));
  }
  if (family == "D") {
    int n = parse_positive_int(params, "n");
    if (n < 4) fail(errc::unknown_preset, "D:n requires n >= 4");
    return preset_d(n);
  }
  if (family == "E") {
    int n = parse_positive_int(params, "n");
    if (n < 6 || n > 8) fail(errc::unknown_preset, "E:n requires n in {6,7,8}");
    return preset_e(n);
  }
  if (family == "Atilde") {
    auto comma = params.find(',');
    if (comma == std::string::npos) {
      fail(errc::unknown_preset, "Atilde preset needs two parameters a,b");
    }
    int a = parse_positive_int(params.substr(0, comma), "a");
    int b = parse_positive_int(params.substr(comma + 1), "b");
    return preset_a_tilde(a, b);
  }
  if (family == "Dtilde") {
    int n = parse_positive_int(params, "n");
    if (n < 4) fail(errc::unknown_preset, "Dtilde:n requires n >= 4");
    return preset_d_tilde(n);
  }
  if (family == "Etilde") {
    int n = parse_positive_int(params, "n");
    if (n == 6) return preset_e6_tilde();
    if (n == 7) return preset_e7_tilde();
    if (n == 8) return preset_e8_tilde();
    fail(errc::unknown_preset, "Etilde:n requires n in {6,7,8}");
  }
  fail(errc::unknown_preset, "unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"A:n",        "D:n",      "E:6|7|8",       "Atilde:a,b",
          "Dtilde:n",   "Etilde:6|7|8", "Dtilde4-paper", "Etilde8-paper"};
}

Quiver quiver_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_integer()) {
    fail(errc::parse_error, "quiver JSON needs an integer \"vertices\" field");
  }
  int m = j["vertices"].get<int>();
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) fail(errc::parse_error, "\"arrows\" must be an array");
    for (const auto& entry : j["arrows"]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer()) {
        fail(errc::parse_error, "each arrow must be a pair [source, target]");
      }
      arrows.push_back({entry[0].get<int>(), entry[1].get<int>()});
    }
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(errc::parse_error, "\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return Quiver(m, std::move(arrows), std::move(name));
}

Quiver quiver_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open quiver file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return quiver_from_json_text(buf.str());
}

std::string quiver_to_json_text(const Quiver& q) {
  nlohmann::ordered_json j;
  j["vertices"] = q.vertex_count();
  auto arrows = nlohmann::ordered_json::array();
  for (const Arrow& a : q.arrows()) {
    arrows.push_back(nlohmann::ordered_json::array({a.source, a.target}));
  }
  j["arrows"] = std::move(arrows);
  if (!q.name().empty()) j["name"] = q.name();
  return j.dump(2) + "\n";
}

}  // namespace greenseq
