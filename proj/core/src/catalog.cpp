#include "greenseq/catalog.hpp"

#include <algorithm>
#include <set>

namespace greenseq {

std::string to_string(const ModuleTriple& t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
}

std::optional<ModuleTriple> parse_triple(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '(' && ch != ')') s += ch;
  }
  int fields[3];
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t comma = i < 2 ? s.find(',', pos) : s.size();
    if (comma == std::string::npos) return std::nullopt;
    try {
      size_t used = 0;
      std::string part = s.substr(pos, comma - pos);
      fields[i] = std::stoi(part, &used);
      if (used != part.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    pos = comma + 1;
  }
  return ModuleTriple{fields[0], fields[1], fields[2]};
}

const DimVector& Catalog::dim(const ModuleTriple& t) const {
  int idx = index_of(t);
  if (idx < 0) {
    fail(errc::index_out_of_catalog, "triple " + greenseq::to_string(t) + " not in catalog");
  }
  return dims_[idx];
}

int Catalog::index_of(const ModuleTriple& t) const {
  auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
  if (it == triples_.end() || *it != t) return -1;
  return static_cast<int>(it - triples_.begin());
}

int Catalog::is_prj(const DimVector& u) const {
  for (int k = 0; k < vertex_count(); ++k) {
    bool match = true;
    for (int j = 0; j < vertex_count(); ++j) {
      if (cartan_.at(j, k) != u[j]) {
        match = false;
        break;
      }
    }
    if (match) return k;
  }
  return -1;
}

int Catalog::is_inj(const DimVector& u) const {
  for (int k = 0; k < vertex_count(); ++k) {
    bool match = true;
    for (int j = 0; j < vertex_count(); ++j) {
      if (cartan_.at(k, j) != u[j]) {
        match = false;
        break;
      }
    }
    if (match) return k;
  }
  return -1;
}

int Catalog::is_prj_restricted(int vertex, const DimVector& u) const {
  const IntMatrix& cb = cbar_[vertex];
  for (int k = 0; k < vertex_count(); ++k) {
    if (k == vertex) continue;  // column `vertex` encodes no module of the deletion
    bool match = true;
    for (int j = 0; j < vertex_count(); ++j) {
      if (cb.at(j, k) != u[j]) {
        match = false;
        break;
      }
    }
    if (match) return k;
  }
  return -1;
}

DimVector Catalog::coxeter_power(const DimVector& v, int power) const {
  DimVector out = v;
  const IntMatrix& step = power >= 0 ? coxeter_ : coxeter_inv_;
  for (int i = 0; i < std::abs(power); ++i) out = step * out;
  return out;
}

RegularOrbitInfo Catalog::orbit_info(int index) const {
  return orbit_info_[index];
}

namespace {

bool has_negative(const DimVector& v) {
  return std::any_of(v.begin(), v.end(), [](int64_t x) { return x < 0; });
}

// Shared precomputation for the tame construction.
struct Workspace {
  IntMatrix cartan, coxeter, coxeter_inv;
  std::vector<IntMatrix> cbar, phibar, phibar_inv;

  explicit Workspace(const Quiver& q) {
    cartan = cartan_matrix(q);
    coxeter = coxeter_matrix(cartan);
    coxeter_inv = coxeter_inverse(cartan);
    for (int i = 0; i < q.vertex_count(); ++i) {
      auto [cb, pb] = restricted_matrices(q, i);
      cbar.push_back(cb);
      phibar.push_back(pb);
      phibar_inv.push_back(coxeter_inverse(cb));
    }
  }
};

}  // namespace

// Build-time access to the private catalog fields.
struct CatalogAccess {
  static Catalog bare(const Quiver& q) {
    Catalog cat;
    cat.quiver_ = q;
    return cat;
  }

  // Minimal catalog carrying just the matrices, so is_prj / is_inj work
  // during the regular walk before the full triple list exists.
  static Catalog matrices_only(const Quiver& q, const Workspace& w) {
    Catalog cat = bare(q);
    cat.cartan_ = w.cartan;
    cat.coxeter_ = w.coxeter;
    cat.coxeter_inv_ = w.coxeter_inv;
    cat.cbar_ = w.cbar;
    cat.phibar_ = w.phibar;
    cat.phibar_inv_ = w.phibar_inv;
    return cat;
  }

  static void set_class(Catalog& cat, QuiverClass cls, bool tame) {
    cat.cls_ = cls;
    cat.tame_ = tame;
  }

  static void set_matrices(Catalog& cat, IntMatrix cartan, IntMatrix coxeter,
                           IntMatrix coxeter_inv) {
    cat.cartan_ = std::move(cartan);
    cat.coxeter_ = std::move(coxeter);
    cat.coxeter_inv_ = std::move(coxeter_inv);
  }

  static void set_thresholds(Catalog& cat, std::vector<int> p, std::vector<int> q,
                             int m_thresh) {
    cat.p_ = std::move(p);
    cat.q_ = std::move(q);
    cat.m_thresh_ = m_thresh;
  }

  static void set_nonsincere(Catalog& cat, std::vector<DimVector> s) {
    cat.nonsincere_ = std::move(s);
  }

  static void set_regular_count(Catalog& cat, int count) { cat.regular_count_ = count; }

  static void sort_and_index(Catalog& cat, std::vector<ModuleTriple> triples,
                             std::vector<DimVector> dims,
                             std::vector<RegularOrbitInfo> orbits) {
    std::vector<int> perm(triples.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) { return triples[x] < triples[y]; });
    cat.triples_.reserve(triples.size());
    cat.dims_.reserve(triples.size());
    cat.orbit_info_.resize(triples.size());
    for (size_t i = 0; i < perm.size(); ++i) {
      cat.triples_.push_back(triples[perm[i]]);
      cat.dims_.push_back(std::move(dims[perm[i]]));
      cat.orbit_info_[i] = orbits[perm[i]];
    }
    if (cat.triples_.size() >= 65535) {
      fail(errc::capacity_exceeded, "catalog too large for 16-bit module indices");
    }
    // Distinct module triples must carry distinct dimension vectors; the
    // whole comparison machinery depends on it.
    std::set<DimVector> seen;
    for (size_t i = 0; i < cat.triples_.size(); ++i) {
      if (cat.triples_[i].is_shifted_projective()) continue;
      if (!seen.insert(cat.dims_[i]).second) {
        fail(errc::internal, "dimension-vector map is not injective on modules");
      }
    }
  }
};

namespace {

std::vector<DimVector> nonsincere_from_workspace(const Quiver& q, const Workspace& w) {
  const int m = q.vertex_count();
  // Every vertex deletion is rep-finite, so each tau-minus orbit leaves the
  // nonnegative orthant within roughly as many steps as the deletion has
  // positive roots. The cap converts a wild input that slipped through into
  // a diagnosable error.
  const int step_cap = std::max(4096, 8 * m * m);
  std::set<DimVector> s;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      DimVector v = w.cbar[i].column(j);
      int steps = 0;
      while (!has_negative(v)) {
        s.insert(v);
        v = w.phibar_inv[i] * v;
        if (++steps > step_cap) {
          fail(errc::orbit_overflow, "restricted tau-orbit did not terminate");
        }
      }
    }
  }
  return {s.begin(), s.end()};
}

RegularSet build_regulars_impl(const Quiver& q, const std::vector<DimVector>& s,
                               const Workspace& w, const Catalog& lookup) {
  const int m = q.vertex_count();
  RegularSet out;
  out.p.assign(m, 0);
  out.q.assign(m, 0);
  std::set<DimVector> assigned;
  int numbering = 1;
  int orbit_id = 0;
  const int step_cap = static_cast<int>(s.size()) + 2;
  for (const DimVector& u : s) {  // lexicographic order keeps the numbering deterministic
    if (assigned.count(u)) continue;
    std::vector<DimVector> trail;
    DimVector v = u;
    DimVector back = u;
    for (int b = 0;; ++b) {
      int j = lookup.is_prj(v);
      if (j >= 0) {
        out.p[j] = std::max(out.p[j], b + 1);
        break;
      }
      int k = lookup.is_inj(back);
      if (k >= 0) {
        out.q[k] = std::max(out.q[k], b + 1);
        break;
      }
      if (b >= 1 && v == u) {
        for (int i = 0; i < b; ++i) {
          out.triples.push_back({1, b, numbering});
          out.dims.push_back(trail[i]);
          out.orbits.push_back({orbit_id, i, b});
          assigned.insert(trail[i]);
          ++numbering;
        }
        ++orbit_id;
        break;
      }
      trail.push_back(v);
      v = w.coxeter * v;
      back = w.coxeter_inv * back;
      if (b > step_cap) {
        fail(errc::orbit_overflow, "regular orbit walk did not terminate");
      }
    }
  }
  out.m_thresh = 0;
  for (int i = 0; i < m; ++i) out.m_thresh = std::max({out.m_thresh, out.p[i], out.q[i]});
  return out;
}

}  // namespace

std::vector<DimVector> nonsincere_modules(const Quiver& q) {
  Workspace w(q);
  return nonsincere_from_workspace(q, w);
}

RegularSet build_regulars(const Quiver& q, const std::vector<DimVector>& s) {
  Workspace w(q);
  Catalog lookup = CatalogAccess::matrices_only(q, w);
  return build_regulars_impl(q, s, w, lookup);
}

Catalog build_catalog(const Quiver& q) {
  Workspace w(q);
  Catalog cat = CatalogAccess::matrices_only(q, w);
  CatalogAccess::set_class(cat, validate_and_classify(q), /*tame=*/true);

  std::vector<DimVector> s = nonsincere_from_workspace(q, w);
  RegularSet regulars = build_regulars_impl(q, s, w, cat);
  CatalogAccess::set_nonsincere(cat, std::move(s));
  CatalogAccess::set_thresholds(cat, regulars.p, regulars.q, regulars.m_thresh);
  CatalogAccess::set_regular_count(cat, static_cast<int>(regulars.triples.size()));

  const int m = q.vertex_count();
  std::vector<ModuleTriple> triples = std::move(regulars.triples);
  std::vector<DimVector> dims = std::move(regulars.dims);
  std::vector<RegularOrbitInfo> orbits = std::move(regulars.orbits);
  for (int i = 0; i < m; ++i) {
    DimVector cur = w.cartan.column(i);  // dim P_i
    triples.push_back({0, i, 0});
    dims.push_back(cur);
    orbits.push_back({});
    for (int j = 1; j < cat.m_thresh() + cat.p()[i]; ++j) {
      cur = w.coxeter_inv * cur;
      triples.push_back({0, i, j});
      dims.push_back(cur);
      orbits.push_back({});
    }
    cur = w.cartan.row(i);  // dim I_i
    triples.push_back({2, i, 0});
    dims.push_back(cur);
    orbits.push_back({});
    for (int j = 1; j < cat.m_thresh() + cat.q()[i]; ++j) {
      cur = w.coxeter * cur;
      triples.push_back({2, i, j});
      dims.push_back(cur);
      orbits.push_back({});
    }
    DimVector minus_p = w.cartan.column(i);
    for (int64_t& x : minus_p) x = -x;
    triples.push_back({2, i, -1});
    dims.push_back(std::move(minus_p));
    orbits.push_back({});
  }
  CatalogAccess::sort_and_index(cat, std::move(triples), std::move(dims), std::move(orbits));
  return cat;
}

Catalog build_catalog_repfinite(const Quiver& q) {
  Catalog cat = CatalogAccess::bare(q);
  CatalogAccess::set_class(cat, validate_and_classify(q), /*tame=*/false);
  IntMatrix cartan = cartan_matrix(q);
  IntMatrix coxeter = coxeter_matrix(cartan);
  IntMatrix coxeter_inv = coxeter_inverse(cartan);
  CatalogAccess::set_matrices(cat, cartan, coxeter, coxeter_inv);
  const int m = q.vertex_count();
  CatalogAccess::set_thresholds(cat, std::vector<int>(m, 0), std::vector<int>(m, 0), 0);

  const int step_cap = 4096;
  std::vector<ModuleTriple> triples;
  std::vector<DimVector> dims;
  std::vector<RegularOrbitInfo> orbits;
  for (int i = 0; i < m; ++i) {
    DimVector cur = cartan.column(i);
    int r = 0;
    while (true) {
      triples.push_back({0, i, r});
      dims.push_back(cur);
      orbits.push_back({});
      DimVector next = coxeter_inv * cur;
      if (has_negative(next)) break;  // the orbit ended at an injective
      cur = std::move(next);
      if (++r > step_cap) fail(errc::orbit_overflow, "tau-minus orbit did not terminate");
    }
    DimVector minus_p = cartan.column(i);
    for (int64_t& x : minus_p) x = -x;
    triples.push_back({2, i, -1});
    dims.push_back(std::move(minus_p));
    orbits.push_back({});
  }
  CatalogAccess::sort_and_index(cat, std::move(triples), std::move(dims), std::move(orbits));
  return cat;
}

Catalog make_catalog(const Quiver& q) {
  QuiverClass cls = validate_and_classify(q);
  if (cls.rep_finite()) return build_catalog_repfinite(q);
  if (cls.tame()) return build_catalog(q);
  fail(errc::unsupported_type, "underlying graph is not Dynkin or extended Dynkin");
}

}  // namespace greenseq
