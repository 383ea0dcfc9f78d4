#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "greenseq/errors.hpp"

namespace greenseq {

class Quiver;

// Dimension vector of a module (or its negative, for shifted projectives);
// entry j is dim X.e_j.
using DimVector = std::vector<int64_t>;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int64_t& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  int64_t at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  DimVector column(int c) const;
  DimVector row(int r) const;
  IntMatrix transposed() const;
  IntMatrix negated() const;

  bool operator==(const IntMatrix&) const = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
DimVector operator*(const IntMatrix& a, const DimVector& v);

// Exact integer inverse; requires det = +-1 and throws non_unimodular otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

// Entry (j,k) counts directed paths from k to j, trivial paths included, so
// the k-th column is dim P_k and the i-th row is dim I_i.
IntMatrix cartan_matrix(const Quiver& q);

// Phi = -C^t C^{-1}; maps dim X to dim(tau X) for non-projective X.
IntMatrix coxeter_matrix(const IntMatrix& cartan);
IntMatrix coxeter_inverse(const IntMatrix& cartan);

// Cartan/Coxeter pair of the vertex deletion: erase all arrows touching
// `vertex`, close paths by existence (0/1 entries); row and column `vertex`
// are the unit vector.
std::pair<IntMatrix, IntMatrix> restricted_matrices(const Quiver& q, int vertex);

}  // namespace greenseq
