#include "greenseq/matrix.hpp"

#include <algorithm>
#include <cstdlib>

#include "greenseq/quiver.hpp"

namespace greenseq {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DimVector IntMatrix::column(int c) const {
  DimVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

DimVector IntMatrix::row(int r) const {
  DimVector v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix n(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) n.at(r, c) = -at(r, c);
  return n;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      int64_t av = a.at(r, k);
      if (av == 0) continue;
      for (int c = 0; c < b.cols(); ++c) out.at(r, c) += av * b.at(k, c);
    }
  }
  return out;
}

DimVector operator*(const IntMatrix& a, const DimVector& v) {
  DimVector out(a.rows(), 0);
  for (int r = 0; r < a.rows(); ++r) {
    int64_t sum = 0;
    for (int c = 0; c < a.cols(); ++c) sum += a.at(r, c) * v[c];
    out[r] = sum;
  }
  return out;
}

// Integer Gauss-Jordan by Euclidean row reduction on [M | I]. A unimodular
// matrix reduces to the identity by integer row operations, and the right
// block then holds the exact inverse; any pivot with |pivot| != 1 after
// clearing its column certifies |det| != 1.
IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(errc::non_unimodular, "matrix is not square");
  const int n = m.rows();
  IntMatrix a = m;
  IntMatrix inv = IntMatrix::identity(n);

  auto row_axpy = [&](int dst, int src, int64_t factor) {
    if (factor == 0) return;
    for (int c = 0; c < n; ++c) {
      a.at(dst, c) -= factor * a.at(src, c);
      inv.at(dst, c) -= factor * inv.at(src, c);
    }
  };
  auto row_swap = [&](int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < n; ++c) {
      std::swap(a.at(r1, c), a.at(r2, c));
      std::swap(inv.at(r1, c), inv.at(r2, c));
    }
  };

  for (int col = 0; col < n; ++col) {
    // Euclidean reduction: repeatedly cancel the larger entry below the
    // diagonal against the smallest nonzero one until one entry remains.
    while (true) {
      int pivot = -1;
      for (int r = col; r < n; ++r) {
        if (a.at(r, col) != 0 && (pivot < 0 || std::llabs(a.at(r, col)) < std::llabs(a.at(pivot, col)))) {
          pivot = r;
        }
      }
      if (pivot < 0) fail(errc::non_unimodular, "matrix is singular");
      row_swap(col, pivot);
      bool cleared = true;
      for (int r = col + 1; r < n; ++r) {
        if (a.at(r, col) != 0) {
          row_axpy(r, col, a.at(r, col) / a.at(col, col));
          if (a.at(r, col) != 0) cleared = false;
        }
      }
      if (cleared) break;
    }
    if (std::llabs(a.at(col, col)) != 1) {
      fail(errc::non_unimodular, "matrix has |det| != 1");
    }
    if (a.at(col, col) == -1) {
      for (int c = 0; c < n; ++c) {
        a.at(col, c) = -a.at(col, c);
        inv.at(col, c) = -inv.at(col, c);
      }
    }
    for (int r = 0; r < col; ++r) row_axpy(r, col, a.at(r, col));
  }
  return inv;
}

namespace {

// Column k = number of paths from k (counting multiplicities when `closure`
// is false, existence only when true).
IntMatrix path_matrix(const Quiver& q, const std::vector<bool>& arrow_kept, bool closure) {
  const int m = q.vertex_count();
  std::vector<int> order = topological_vertex_order(q);
  std::vector<std::vector<int>> out(m);
  for (size_t i = 0; i < q.arrows().size(); ++i) {
    if (arrow_kept[i]) out[q.arrows()[i].source].push_back(q.arrows()[i].target);
  }
  IntMatrix c(m, m);
  std::vector<int64_t> ways(m);
  for (int k = 0; k < m; ++k) {
    std::fill(ways.begin(), ways.end(), 0);
    ways[k] = 1;
    for (int v : order) {
      if (ways[v] == 0) continue;
      for (int w : out[v]) ways[w] += ways[v];
    }
    for (int j = 0; j < m; ++j) {
      c.at(j, k) = closure ? (ways[j] != 0 ? 1 : 0) : ways[j];
    }
  }
  return c;
}

}  // namespace

IntMatrix cartan_matrix(const Quiver& q) {
  std::vector<bool> all(q.arrows().size(), true);
  return path_matrix(q, all, /*closure=*/false);
}

IntMatrix coxeter_matrix(const IntMatrix& cartan) {
  return (cartan.transposed() * inverse_unimodular(cartan)).negated();
}

IntMatrix coxeter_inverse(const IntMatrix& cartan) {
  return (cartan * inverse_unimodular(cartan).transposed()).negated();
}

std::pair<IntMatrix, IntMatrix> restricted_matrices(const Quiver& q, int vertex) {
  std::vector<bool> kept(q.arrows().size());
  for (size_t i = 0; i < q.arrows().size(); ++i) {
    const Arrow& a = q.arrows()[i];
    kept[i] = a.source != vertex && a.target != vertex;
  }
  IntMatrix cbar = path_matrix(q, kept, /*closure=*/true);
  return {cbar, coxeter_matrix(cbar)};
}

}  // namespace greenseq
