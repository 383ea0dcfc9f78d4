#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greenseq/matrix.hpp"
#include "greenseq/quiver.hpp"

namespace greenseq {

// (a,b,c) encoding of an indecomposable module or shifted projective:
//   (0, b, c) preprojective tau^{-c} P_b with c >= 0
//   (1, b, c) regular module of tau-period b with running number c
//   (2, b, c) preinjective tau^{c} I_b for c >= 0; c = -1 encodes P_b^-
// Triples are totally ordered lexicographically.
struct ModuleTriple {
  int a = 0;
  int b = 0;
  int c = 0;

  auto operator<=>(const ModuleTriple&) const = default;
  bool is_shifted_projective() const { return a == 2 && c == -1; }
};

std::string to_string(const ModuleTriple& t);
std::optional<ModuleTriple> parse_triple(const std::string& text);

struct RegularOrbitInfo {
  int orbit = 0;     // orbit id, in construction order
  int position = 0;  // tau-steps below the orbit's entry vector
  int period = 0;
};

// Output of the regular-orbit walk: the triples of all tau-periodic orbits
// met by the nonsincere set, their dimension vectors, and the sincerity
// thresholds p_i / q_i / m.
struct RegularSet {
  std::vector<ModuleTriple> triples;
  std::vector<DimVector> dims;
  std::vector<RegularOrbitInfo> orbits;
  std::vector<int> p, q;
  int m_thresh = 0;
};

class Catalog {
public:
  const Quiver& quiver() const { return quiver_; }
  const QuiverClass& cls() const { return cls_; }
  bool tame() const { return tame_; }
  int vertex_count() const { return quiver_.vertex_count(); }

  int size() const { return static_cast<int>(triples_.size()); }
  const std::vector<ModuleTriple>& triples() const { return triples_; }
  const ModuleTriple& triple(int index) const { return triples_[index]; }
  const DimVector& dim(int index) const { return dims_[index]; }
  const DimVector& dim(const ModuleTriple& t) const;
  int index_of(const ModuleTriple& t) const;  // -1 if absent

  const std::vector<int>& p() const { return p_; }
  const std::vector<int>& q() const { return q_; }
  int m_thresh() const { return m_thresh_; }
  const std::vector<DimVector>& nonsincere() const { return nonsincere_; }
  int regular_count() const { return regular_count_; }

  int is_prj(const DimVector& u) const;
  int is_inj(const DimVector& u) const;
  int is_prj_restricted(int vertex, const DimVector& u) const;  // never returns `vertex`

  const IntMatrix& cartan() const { return cartan_; }
  const IntMatrix& coxeter() const { return coxeter_; }
  const IntMatrix& coxeter_inv() const { return coxeter_inv_; }
  const IntMatrix& cbar(int vertex) const { return cbar_[vertex]; }
  const IntMatrix& phibar(int vertex) const { return phibar_[vertex]; }
  const IntMatrix& phibar_inv(int vertex) const { return phibar_inv_[vertex]; }

  // dim(tau^power X) for a dimension vector staying inside the module classes
  // the caller controls; power may be negative.
  DimVector coxeter_power(const DimVector& v, int power) const;

  RegularOrbitInfo orbit_info(int index) const;  // index must be a regular triple

private:
  friend struct CatalogAccess;

  Quiver quiver_{1, {}};
  QuiverClass cls_;
  bool tame_ = false;
  std::vector<ModuleTriple> triples_;
  std::vector<DimVector> dims_;
  std::vector<RegularOrbitInfo> orbit_info_;  // parallel to triples_, valid for a == 1
  std::vector<int> p_, q_;
  int m_thresh_ = 0;
  int regular_count_ = 0;
  std::vector<DimVector> nonsincere_;
  IntMatrix cartan_, coxeter_, coxeter_inv_;
  std::vector<IntMatrix> cbar_, phibar_, phibar_inv_;
};

// Dimension vectors of all nonsincere indecomposables (the set S), sorted.
// Assumes every vertex deletion of q is representation-finite.
std::vector<DimVector> nonsincere_modules(const Quiver& q);

RegularSet build_regulars(const Quiver& q, const std::vector<DimVector>& s);

// Tame catalog per the orbit-walk construction; q must classify as extended
// Dynkin (callers go through make_catalog for the gate).
Catalog build_catalog(const Quiver& q);

// Rep-finite catalog: all indecomposables (one tau-minus orbit per projective)
// plus the shifted projectives.
Catalog build_catalog_repfinite(const Quiver& q);

// Validates, classifies and dispatches; throws unsupported_type for wild input.
Catalog make_catalog(const Quiver& q);

}  // namespace greenseq
