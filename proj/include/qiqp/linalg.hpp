#pragma once

#include "qiqp/matrix.hpp"

#include <optional>

namespace qiqp {

// Exact linear algebra over the integers/rationals. No floating point
// anywhere; determinants use fraction-free (Bareiss) elimination.

// Exact determinant of a square matrix.
Int determinant(const IntMatrix& m);

// Maximum |det| over all square submatrices of every size >= 1, by exhaustive
// enumeration. Returns 1 for a matrix with no rows: this is the Delta
// convention that keeps branching ranges well-defined at an empty equality
// system.
Int max_abs_subdeterminant(const IntMatrix& m);

// Exact rank over the rationals.
int rank(const IntMatrix& m);

// True iff `row` is linearly independent of the rows of `m`.
bool row_independent(const IntMatrix& m, const IntVector& row);

// Integer basis of the nullspace of a full-row-rank matrix C, built from
// Cramer-style determinantal columns on a nonsingular column submatrix and
// then divided by their gcd. Every column y satisfies C y = 0 and
// |y|_inf <= delta^2 where delta = max_abs_subdeterminant(C). For a C with no
// rows the basis is the identity.
struct KernelBasis {
  IntMatrix basis;              // n x r, columns are the kernel vectors
  Int delta = 1;                // max_abs_subdeterminant of the source matrix
  std::vector<int> pivot_cols;  // column basis used by the construction
  std::vector<int> free_cols;   // complementary columns, one per basis vector

  int dim() const { return basis.cols(); }
  IntVector column(int i) const { return basis.col(i); }
};

KernelBasis integer_kernel_basis(const IntMatrix& c);

// Unique rational solution of a square system (Cramer), or nullopt when the
// matrix is singular.
std::optional<RatVector> solve_unique_exact(const IntMatrix& c, const IntVector& d);

// Right inverse C^T (C C^T)^-1 of a full-row-rank matrix. Every entry has
// denominator dividing det(C C^T).
RatMatrix right_inverse(const IntMatrix& c);

// right_inverse(c) * d without forming the full inverse; the canonical
// rational solution of C x = d.
RatVector canonical_solution(const IntMatrix& c, const IntVector& d);

}  // namespace qiqp
