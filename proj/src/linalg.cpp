#include "qiqp/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace qiqp {

namespace {

// Row echelon data computed by fraction-free elimination on a working copy.
struct Echelon {
  int rank = 0;
  std::vector<int> pivot_cols;
};

Echelon echelon(IntMatrix m) {
  Echelon e;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    }
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Int g = boost::multiprecision::gcd(m(r, c), m(i, c));
      const Int fr = m(i, c) / g;
      const Int fi = m(r, c) / g;
      for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) * fi - m(r, j) * fr;
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const int n = m.rows();
  if (n == 1) return m(0, 0);

  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (w(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w(k, j), w(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Bareiss step: exact division by the previous pivot.
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

namespace {

// Visits all size-k index subsets of {0..limit-1} in lexicographic order.
template <typename F>
void for_each_combination(int limit, int k, F&& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > limit) return;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == limit - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Int max_abs_subdeterminant(const IntMatrix& m) {
  if (m.rows() == 0) return 1;
  Int best = 0;
  const int kmax = std::min(m.rows(), m.cols());
  for (int k = 1; k <= kmax; ++k) {
    for_each_combination(m.rows(), k, [&](const std::vector<int>& rows) {
      for_each_combination(m.cols(), k, [&](const std::vector<int>& cols) {
        const Int d = int_abs(determinant(m.select(rows, cols)));
        if (d > best) best = d;
      });
    });
  }
  return best;
}

int rank(const IntMatrix& m) {
  if (m.rows() == 0) return 0;
  return echelon(m).rank;
}

bool row_independent(const IntMatrix& m, const IntVector& row) {
  IntMatrix ext = m;
  ext.append_row(row);
  return rank(ext) == rank(m) + 1;
}

KernelBasis integer_kernel_basis(const IntMatrix& c) {
  KernelBasis kb;
  const int n = c.cols();
  const int m = c.rows();
  if (m == 0) {
    kb.basis = IntMatrix::identity(n);
    kb.delta = 1;
    for (int i = 0; i < n; ++i) kb.free_cols.push_back(i);
    return kb;
  }

  const Echelon e = echelon(c);
  if (e.rank != m) throw std::invalid_argument("integer_kernel_basis: rows not independent");

  kb.pivot_cols = e.pivot_cols;
  std::vector<bool> is_pivot(n, false);
  for (int p : kb.pivot_cols) is_pivot[p] = true;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) kb.free_cols.push_back(j);

  kb.delta = max_abs_subdeterminant(c);
  const int r = n - m;
  kb.basis = IntMatrix(n, r);

  std::vector<int> all_rows(m);
  std::iota(all_rows.begin(), all_rows.end(), 0);
  const IntMatrix cb = c.select(all_rows, kb.pivot_cols);
  const Int det_b = determinant(cb);
  QIQP_CHECK(det_b != 0, "kernel basis column selection singular");

  for (int fi = 0; fi < r; ++fi) {
    const int f = kb.free_cols[fi];
    IntVector y(n, Int(0));
    y[f] = det_b;
    // Cramer: the pivot-coordinate entries are (up to sign) m x m minors of C.
    for (int j = 0; j < m; ++j) {
      IntMatrix rep = cb;
      for (int i = 0; i < m; ++i) rep(i, j) = c(i, f);
      y[kb.pivot_cols[j]] = -determinant(rep);
    }
    Int g = content(y);
    for (Int& v : y) v /= g;
    for (const Int& v : y) {
      if (v == 0) continue;
      if (v < 0)
        for (Int& w : y) w = -w;
      break;
    }
    QIQP_CHECK(is_zero(mat_vec(c, y)), "kernel vector not in nullspace");
    QIQP_CHECK(linf_norm(y) <= kb.delta * kb.delta, "kernel vector exceeds delta^2 bound");
    for (int i = 0; i < n; ++i) kb.basis(i, fi) = y[i];
  }
  return kb;
}

std::optional<RatVector> solve_unique_exact(const IntMatrix& c, const IntVector& d) {
  if (c.rows() != c.cols()) throw std::invalid_argument("solve_unique_exact: matrix not square");
  if (c.rows() != static_cast<int>(d.size()))
    throw std::invalid_argument("solve_unique_exact: rhs length mismatch");
  const Int det = determinant(c);
  if (det == 0) return std::nullopt;
  const int n = c.rows();
  RatVector x(n);
  for (int j = 0; j < n; ++j) {
    IntMatrix rep = c;
    for (int i = 0; i < n; ++i) rep(i, j) = d[i];
    x[j] = Rat(determinant(rep)) / Rat(det);
  }
  return x;
}

namespace {

// Inverse of a nonsingular square matrix as adjugate / determinant.
RatMatrix inverse(const IntMatrix& g, const Int& det) {
  const int n = g.rows();
  RatMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = Rat(1) / Rat(det);
    return inv;
  }
  std::vector<int> rows, cols;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rows.clear();
      cols.clear();
      for (int r = 0; r < n; ++r)
        if (r != i) rows.push_back(r);
      for (int c = 0; c < n; ++c)
        if (c != j) cols.push_back(c);
      Int minor = determinant(g.select(rows, cols));
      if ((i + j) % 2 != 0) minor = -minor;
      inv(j, i) = Rat(minor) / Rat(det);  // adjugate transposes the cofactors
    }
  }
  return inv;
}

}  // namespace

RatMatrix right_inverse(const IntMatrix& c) {
  if (c.rows() == 0) throw std::invalid_argument("right_inverse: empty matrix");
  const IntMatrix gram = mat_mul(c, c.transpose());
  const Int det = determinant(gram);
  if (det == 0) throw std::invalid_argument("right_inverse: rows not independent");
  const RatMatrix ginv = inverse(gram, det);
  RatMatrix out(c.cols(), c.rows());
  for (int i = 0; i < c.cols(); ++i)
    for (int j = 0; j < c.rows(); ++j) {
      Rat s = 0;
      for (int k = 0; k < c.rows(); ++k) s += Rat(c(k, i)) * ginv(k, j);
      out(i, j) = s;
    }
  return out;
}

RatVector canonical_solution(const IntMatrix& c, const IntVector& d) {
  if (c.rows() == 0) return RatVector(c.cols(), Rat(0));
  if (c.rows() != static_cast<int>(d.size()))
    throw std::invalid_argument("canonical_solution: rhs length mismatch");
  const IntMatrix gram = mat_mul(c, c.transpose());
  const auto z = solve_unique_exact(gram, d);
  if (!z) throw std::invalid_argument("canonical_solution: rows not independent");
  RatVector x(c.cols(), Rat(0));
  for (int i = 0; i < c.cols(); ++i) {
    Rat s = 0;
    for (int k = 0; k < c.rows(); ++k) s += Rat(c(k, i)) * (*z)[k];
    x[i] = s;
  }
  return x;
}

}  // namespace qiqp
