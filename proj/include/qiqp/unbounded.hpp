#pragma once

#include "qiqp/solver.hpp"

#include <functional>

namespace qiqp {

// Unboundedness decision machinery: the family of equality systems reachable
// by the branching rules is independent of b, and unboundedness reduces to
// finitely many univariate integer quadratic programs along candidate lines.

struct FamilyRowMeta {
  enum class Kind { Fixed, FromA, Deep };
  Kind kind = Kind::Fixed;
  int a_row = -1;      // FromA: row index into the collector's A
  Int m_bound = 0;     // FromA: max |a^T y| over the parent kernel basis
  Int b_bound = 0;     // Deep: y^T Q y of the generating kernel column
  Int fixed_value = 0; // Fixed: pinned right-hand side entry

  bool operator==(const FamilyRowMeta& o) const {
    return kind == o.kind && a_row == o.a_row && m_bound == o.m_bound && b_bound == o.b_bound &&
           fixed_value == o.fixed_value;
  }
};

struct FamilyEntry {
  IntMatrix c;
  int parent = -1;                           // entry owning all rows but the last
  std::vector<FamilyRowMeta> last_row_alts;  // provenances of the last row
  bool terminal = false;                     // full column rank
};

struct ConstraintFamily {
  std::vector<FamilyEntry> entries;  // entry 0 is the root system
  Int delta_hat = 1;                 // max Delta over every member

  // Row provenances of an entry, root rows first.
  std::vector<std::vector<FamilyRowMeta>> row_alternatives(int index) const;
};

// Every equality system reachable from c_init by appending an independent row
// of `a` or an independent row 2 y^T Q, deduplicated by matrix equality. Never
// reads any right-hand side.
ConstraintFamily collect_constraint_family(const IntMatrix& q, const IntMatrix& a,
                                           const IntMatrix& c_init, const IntVector& d_init,
                                           long long entry_budget = 100'000);

// Convenience form matching the (Q, A) contract with an empty initial system.
ConstraintFamily collect_constraint_family(const IntMatrix& q, const IntMatrix& a);

// The candidate offset grid of one family member: v = C_right^-1 v0 + v1 over
// all integer v0 with |v0|_inf <= n^2 delta_hat^4 alpha and rational v1 with
// |v1|_1 <= delta_hat^2 n and denominator det(C C^T). Deterministic order;
// return false from the visitor to stop.
void enumerate_candidate_vectors(const IntMatrix& c, const Int& delta_hat, const Int& alpha,
                                 int n, const std::function<bool(const RatVector&)>& visit);

enum class TriState { False, True, Unknown };

// Exact unboundedness decision on a normalized instance. Unknown only when an
// enumeration budget was exhausted.
TriState check_unbounded(const NormalizedIqp& prob, long long combo_budget = 1'000'000,
                         long long family_budget = 100'000);

// Cheap sufficient test: a feasible point and an integer recession direction
// u with A u <= 0, C u = 0 and the objective strictly decreasing along the
// ray. Searches |u|_inf <= bound; absence proves nothing.
struct RayCertificate {
  IntVector x;          // augmented coordinates
  IntVector direction;  // augmented coordinates
};
std::optional<RayCertificate> ray_certificate(const NormalizedIqp& prob, const Int& bound,
                                              long long work_cap = 2'000'000);

// Caller-facing form: certificate in original coordinates.
std::optional<std::pair<IntVector, IntVector>> ray_certificate(const Iqp& iqp, const Int& bound);

struct StatusOptions {
  SolveOptions solve;
  Int ray_bound = 4;
  long long combo_budget = 1'000'000;
  long long family_budget = 100'000;
};

struct StatusResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<IntVector> x;   // original coordinates
  std::optional<Rat> value;     // original scale
  SearchStats stats;
};

// Full decision pipeline: ray certificate, then the branching solver, then
// the exhaustive unboundedness check. FeasibleOnly signals an exhausted
// budget: a feasible point is known but boundedness is undecided.
StatusResult solve_with_status(const Iqp& iqp, const StatusOptions& opts = {});

}  // namespace qiqp
