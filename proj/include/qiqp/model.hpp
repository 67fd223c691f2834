#pragma once

#include "qiqp/linalg.hpp"

#include <optional>

namespace qiqp {

// Problem instance as supplied by callers: minimize x^T Q x (+ q^T x + c0)
// subject to A x <= b over integer x. Equality rows never appear in external
// input; they arise from normalization and branching only.
struct Iqp {
  int n = 0;
  IntMatrix Q;
  IntMatrix A;
  IntVector b;
  std::optional<IntVector> linear;  // q
  std::optional<Int> constant;      // c0

  bool operator==(const Iqp& o) const {
    return n == o.n && Q == o.Q && A == o.A && b == o.b && linear == o.linear &&
           constant == o.constant;
  }
};

// Instance with an explicit equality system C x = d. C always has full row
// rank and exactly n columns.
struct AugmentedIqp {
  int n = 0;
  IntMatrix Q;  // symmetric after normalization
  IntMatrix A;
  IntVector b;
  IntMatrix C;
  IntVector d;
};

// Normalization result. Objective values of `aug` are in the doubled scale:
// x^T (Q+Q^T) x = 2 (x^T Q x + q^T x + c0) on the slice where the embedded
// variable equals 1; reporting divides by two.
struct NormalizedIqp {
  AugmentedIqp aug;
  int orig_n = 0;
  bool embedded = false;  // extra trailing variable pinned to 1 by C
  Int alpha = 0;          // max |entry| of normalized Q and A

  // Strip the embedded variable, returning a vector over the caller's n.
  IntVector to_user(const IntVector& x) const {
    IntVector out(x.begin(), x.begin() + orig_n);
    return out;
  }
};

enum class SolveStatus { Infeasible, Unbounded, Optimal, FeasibleOnly };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  IntVector x;  // meaningful unless Infeasible
  Rat value;    // objective in the caller's original scale

  static SolveOutcome infeasible() { return {}; }
};

// Q + Q^T. Doubles every objective value; the reporting layer halves.
IntMatrix symmetrize(const IntMatrix& q);

// Linear-term embedding: one extra variable pinned to 1 carries q and c0.
struct EmbedResult {
  IntMatrix Q;       // (n+1) x (n+1), still asymmetric
  IntVector c_row;   // equality row selecting the new variable
  Int d_value = 1;   // its required value
};
EmbedResult embed_linear(const IntMatrix& q_mat, const IntVector& q_lin, const Int& c0);

// Among rows with identical coefficient vectors keep only the one with the
// smallest bound. Preserves the integer feasible set and caps the row count
// at (2*alpha+1)^n.
std::pair<IntMatrix, IntVector> reduce_rows(const IntMatrix& a, const IntVector& b);

NormalizedIqp normalize(const Iqp& iqp);

// x^T Q x, exact.
Int evaluate_objective(const IntMatrix& q, const IntVector& x);

// Objective of the original instance: x^T Q x + q^T x + c0.
Int evaluate_user_objective(const Iqp& iqp, const IntVector& x);

bool check_feasible(const IntMatrix& a, const IntVector& b, const IntMatrix& c,
                    const IntVector& d, const IntVector& x);

// Deep/shallow classification of a feasible point against a kernel basis.
// Returns the index of a kernel column y with x+y or x-y infeasible, or
// nullopt when x is deep.
std::optional<int> classify_solution(const IntVector& x, const IntMatrix& a, const IntVector& b,
                                     const IntMatrix& c, const IntVector& d,
                                     const KernelBasis& kernel);

}  // namespace qiqp
