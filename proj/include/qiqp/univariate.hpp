#pragma once

#include "qiqp/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qiqp {

// Integer interval with optional infinite ends.
struct IntervalZ {
  bool empty = false;
  std::optional<Int> lo;  // nullopt: unbounded below
  std::optional<Int> hi;  // nullopt: unbounded above

  void clip_lo(const Int& v) {
    if (!lo || *lo < v) lo = v;
    normalize();
  }
  void clip_hi(const Int& v) {
    if (!hi || *hi > v) hi = v;
    normalize();
  }
  void normalize() {
    if (lo && hi && *lo > *hi) empty = true;
  }
};

struct UnivariateOutcome {
  enum class Kind { Infeasible, Unbounded, Optimal } kind = Kind::Infeasible;
  Int lambda;
  Rat value;
};

// Minimize q2*l^2 + q1*l + q0 over integers l subject to coeff*l <= bound per
// constraint. The feasible set is an integer interval; the minimum is found by
// vertex rounding (q2 > 0) or endpoint inspection, and Unbounded is reported
// exactly when the parabola descends along an infinite side of the interval.
UnivariateOutcome univariate_iqp(const Rat& q2, const Rat& q1, const Rat& q0,
                                 const std::vector<std::pair<Rat, Rat>>& constraints);

// lambda = base + mod * t ranges over the integers making lambda*u + w
// integral; nullopt when no integer lambda does.
struct LambdaClass {
  Int base;
  Int mod;  // >= 1
};
std::optional<LambdaClass> integral_lambda_class(const RatVector& u, const RatVector& w);

// One arithmetic-progression step through the integer points of the rational
// line {lambda*u + w : lambda integer}.
struct IntegerLine {
  IntVector anchor;
  IntVector step;  // nonzero when u != 0
};
std::optional<IntegerLine> integer_line(const RatVector& u, const RatVector& w);

// Exact minimization of x^T qs x over the integer points of a rational line
// subject to a x <= b. `candidates` holds every potential argmin (vertex
// roundings and finite endpoints), or a deterministic feasible representative
// when the objective is unbounded along the line or flat on an infinite
// interval.
struct LineMinimizeResult {
  bool feasible = false;
  bool objective_unbounded = false;
  std::vector<IntVector> candidates;
};
LineMinimizeResult minimize_on_line(const IntMatrix& qs, const IntMatrix& a, const IntVector& b,
                                    const RatVector& u, const RatVector& w);

}  // namespace qiqp
