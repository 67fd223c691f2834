#pragma once

#include "qiqp/model.hpp"
#include "qiqp/univariate.hpp"

namespace qiqp {

struct SolveOptions {
  long long node_budget = 10'000'000;
  int workers = 1;
};

struct SearchStats {
  long long nodes = 0;
  long long leaves = 0;
  long long local_points = 0;
  Int max_delta = 0;
  // Equality system of the node that produced the winning candidate; used by
  // structural tests around optimal-translation invariance.
  std::optional<IntMatrix> best_origin_c;
  std::optional<IntVector> best_origin_d;

  void merge(const SearchStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    local_points += o.local_points;
    if (o.max_delta > max_delta) max_delta = o.max_delta;
  }
};

// Result of the branching search on a normalized instance. Coordinates are in
// the augmented space and the objective is in the doubled scale.
struct RawSolveResult {
  bool feasible = false;
  IntVector x;
  Int internal_obj;
  SearchStats stats;
};

RawSolveResult solve_normalized(const NormalizedIqp& prob, const SolveOptions& opts = {});

struct SolveResult {
  SolveOutcome outcome;
  SearchStats stats;
};

// Branching solver on a caller-facing instance: normalizes, searches, and
// reports in the original variable space and objective scale. Never reports
// Unbounded; if any feasible point exists one is returned, and on bounded
// instances the returned point is optimal with deterministic
// (objective, lexicographic) tie-breaking.
SolveResult solve(const Iqp& iqp, const SolveOptions& opts = {});

// --- individual search steps, exposed for direct testing ---

struct BranchValue {
  IntVector row;
  Int value;
};

// All (row, value) pairs of the shallow case: rows of A independent of the
// rows of C, values spanning the closed range [b_j - alpha*n*delta^2, b_j].
std::vector<BranchValue> enumerate_shallow_branches(const IntMatrix& c, const IntMatrix& a,
                                                    const IntVector& b, const Int& alpha,
                                                    const Int& delta);

// All (row, value) pairs of the deep case: rows 2*y^T*Q for kernel columns y
// with y^T*Q independent of the rows of C, values spanning
// [-n^2*delta^4*alpha, n^2*delta^4*alpha].
std::vector<BranchValue> enumerate_deep_branches(const IntMatrix& c, const IntMatrix& q,
                                                 const KernelBasis& kernel, const Int& alpha,
                                                 const Int& delta);

// Feasible integer points within l1 distance `radius` of x0 on the affine
// subspace C x = d, i.e. { x : |x - x0|_1 <= radius, C x = d, A x <= b }.
std::vector<IntVector> local_search(const IntMatrix& c, const IntVector& d, const RatVector& x0,
                                    const Int& radius, const IntMatrix& a, const IntVector& b);

// Full-rank base case: the unique rational solution of C x = d when integral
// and feasible.
std::optional<IntVector> base_case_solve(const IntMatrix& c, const IntVector& d,
                                         const IntMatrix& a, const IntVector& b);

}  // namespace qiqp
