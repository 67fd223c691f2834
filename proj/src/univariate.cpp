#include "qiqp/univariate.hpp"

namespace qiqp {

namespace {

// Extended gcd: returns g = gcd(a, b) with sa*a + sb*b = g.
Int egcd(const Int& a, const Int& b, Int& sa, Int& sb) {
  if (b == 0) {
    sa = a >= 0 ? 1 : -1;
    sb = 0;
    return int_abs(a);
  }
  Int sa2, sb2;
  const Int g = egcd(b, a % b, sa2, sb2);
  sa = sb2;
  sb = sa2 - (a / b) * sb2;
  return g;
}

Int mod_norm(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Candidate arg-min positions of a*t^2 + b*t over an integer interval, plus
// unboundedness. When unbounded (or flat on an infinite interval) a single
// deterministic representative is supplied instead.
struct QuadMin {
  bool unbounded = false;
  std::vector<Int> candidates;
};

QuadMin minimize_quadratic(const Rat& a, const Rat& b, const IntervalZ& itv) {
  QuadMin out;
  if (itv.empty) return out;
  auto add = [&](const Int& t) {
    Int v = t;
    if (itv.lo && v < *itv.lo) v = *itv.lo;
    if (itv.hi && v > *itv.hi) v = *itv.hi;
    for (const Int& c : out.candidates)
      if (c == v) return;
    out.candidates.push_back(v);
  };
  const Int rep = itv.lo ? *itv.lo : (itv.hi ? *itv.hi : Int(0));

  if (a > 0) {
    const Rat vertex = -b / (2 * a);
    add(rat_floor(vertex));
    add(rat_ceil(vertex));
    return out;
  }
  if (a < 0) {
    if (!itv.lo || !itv.hi) {
      out.unbounded = true;
      out.candidates.push_back(rep);
      return out;
    }
    add(*itv.lo);
    add(*itv.hi);
    return out;
  }
  if (b == 0) {
    if (itv.lo) add(*itv.lo);
    if (itv.hi) add(*itv.hi);
    if (out.candidates.empty()) out.candidates.push_back(rep);
    return out;
  }
  if (b > 0) {
    // descending toward -inf
    if (!itv.lo) {
      out.unbounded = true;
      out.candidates.push_back(rep);
    } else {
      add(*itv.lo);
    }
  } else {
    if (!itv.hi) {
      out.unbounded = true;
      out.candidates.push_back(rep);
    } else {
      add(*itv.hi);
    }
  }
  return out;
}

IntervalZ interval_from_constraints(const std::vector<std::pair<Rat, Rat>>& constraints) {
  IntervalZ itv;
  for (const auto& [coeff, bound] : constraints) {
    if (coeff == 0) {
      if (bound < 0) itv.empty = true;
    } else if (coeff > 0) {
      itv.clip_hi(rat_floor(bound / coeff));
    } else {
      itv.clip_lo(rat_ceil(bound / coeff));
    }
    if (itv.empty) return itv;
  }
  return itv;
}

}  // namespace

UnivariateOutcome univariate_iqp(const Rat& q2, const Rat& q1, const Rat& q0,
                                 const std::vector<std::pair<Rat, Rat>>& constraints) {
  UnivariateOutcome out;
  const IntervalZ itv = interval_from_constraints(constraints);
  if (itv.empty) return out;
  const QuadMin qm = minimize_quadratic(q2, q1, itv);
  if (qm.unbounded) {
    out.kind = UnivariateOutcome::Kind::Unbounded;
    return out;
  }
  out.kind = UnivariateOutcome::Kind::Optimal;
  bool first = true;
  for (const Int& t : qm.candidates) {
    const Rat v = q2 * Rat(t) * Rat(t) + q1 * Rat(t) + q0;
    if (first || v < out.value || (v == out.value && t < out.lambda)) {
      out.lambda = t;
      out.value = v;
      first = false;
    }
  }
  return out;
}

std::optional<LambdaClass> integral_lambda_class(const RatVector& u, const RatVector& w) {
  if (u.size() != w.size()) throw std::invalid_argument("integral_lambda_class: size mismatch");
  LambdaClass cls{Int(0), Int(1)};
  for (std::size_t i = 0; i < u.size(); ++i) {
    // u_i*lambda + w_i integral <=> p*lambda === r (mod q)
    const Int q = boost::multiprecision::lcm(denominator(u[i]), denominator(w[i]));
    if (q == 1) continue;
    const Int p = numerator(u[i]) * (q / denominator(u[i]));
    const Int r = mod_norm(-numerator(w[i]) * (q / denominator(w[i])), q);
    // substitute lambda = base + mod*t: (p*mod) t === r - p*base (mod q)
    const Int lhs = mod_norm(p * cls.mod, q);
    const Int rhs = mod_norm(r - p * cls.base, q);
    Int sa, sb;
    const Int g = egcd(lhs, q, sa, sb);
    if (rhs % g != 0) return std::nullopt;
    const Int qg = q / g;
    const Int t0 = mod_norm(sa * (rhs / g), qg);
    cls.base += cls.mod * t0;
    cls.mod *= qg;
    cls.base = mod_norm(cls.base, cls.mod);
  }
  return cls;
}

std::optional<IntegerLine> integer_line(const RatVector& u, const RatVector& w) {
  const auto cls = integral_lambda_class(u, w);
  if (!cls) return std::nullopt;
  IntegerLine line;
  line.anchor.resize(u.size());
  line.step.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Rat a = Rat(cls->base) * u[i] + w[i];
    const Rat s = Rat(cls->mod) * u[i];
    QIQP_CHECK(is_integer(a) && is_integer(s), "integer line substitution not integral");
    line.anchor[i] = numerator(a);
    line.step[i] = numerator(s);
  }
  return line;
}

LineMinimizeResult minimize_on_line(const IntMatrix& qs, const IntMatrix& a, const IntVector& b,
                                    const RatVector& u, const RatVector& w) {
  LineMinimizeResult out;
  const auto line = integer_line(u, w);
  if (!line) return out;

  IntervalZ itv;
  for (int i = 0; i < a.rows(); ++i) {
    const IntVector row = a.row(i);
    const Int c1 = dot(row, line->step);
    const Int c0 = dot(row, line->anchor);
    if (c1 == 0) {
      if (c0 > b[i]) itv.empty = true;
    } else if (c1 > 0) {
      itv.clip_hi(floor_div(b[i] - c0, c1));
    } else {
      itv.clip_lo(ceil_div(b[i] - c0, c1));
    }
    if (itv.empty) return out;
  }

  const IntVector qstep = mat_vec(qs, line->step);
  const Rat qa = Rat(dot(line->step, qstep));
  const Rat qb = Rat(2 * dot(line->anchor, qstep));

  const QuadMin qm = minimize_quadratic(qa, qb, itv);
  out.feasible = true;
  out.objective_unbounded = qm.unbounded;
  for (const Int& t : qm.candidates) {
    IntVector x(line->anchor.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = line->anchor[i] + t * line->step[i];
    out.candidates.push_back(std::move(x));
  }
  return out;
}

}  // namespace qiqp
