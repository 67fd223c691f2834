#include "qiqp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

namespace qiqp {

namespace {

// Per-variable bounds implied by single rows of A, iterated to a fixpoint.
// Used only to skip work that provably cannot produce a feasible point.
struct VarBounds {
  std::vector<std::optional<Int>> lo, hi;
  bool infeasible = false;
};

VarBounds derive_bounds(const IntMatrix& a, const IntVector& b, int max_rounds = 24) {
  const int n = a.cols();
  VarBounds vb;
  vb.lo.assign(n, std::nullopt);
  vb.hi.assign(n, std::nullopt);
  for (int round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < n; ++j) {
        if (a(i, j) == 0) continue;
        Int rest = 0;
        bool finite = true;
        for (int k = 0; k < n && finite; ++k) {
          if (k == j || a(i, k) == 0) continue;
          if (a(i, k) > 0) {
            if (vb.lo[k])
              rest += a(i, k) * *vb.lo[k];
            else
              finite = false;
          } else {
            if (vb.hi[k])
              rest += a(i, k) * *vb.hi[k];
            else
              finite = false;
          }
        }
        if (!finite) continue;
        const Int slack = b[i] - rest;
        if (a(i, j) > 0) {
          const Int nh = floor_div(slack, a(i, j));
          if (!vb.hi[j] || nh < *vb.hi[j]) {
            vb.hi[j] = nh;
            changed = true;
          }
        } else {
          const Int nl = ceil_div(slack, a(i, j));
          if (!vb.lo[j] || nl > *vb.lo[j]) {
            vb.lo[j] = nl;
            changed = true;
          }
        }
      }
    }
    if (!changed) break;
  }
  for (int j = 0; j < n; ++j) {
    if (vb.lo[j] && vb.hi[j] && *vb.lo[j] > *vb.hi[j]) vb.infeasible = true;
  }
  return vb;
}

// Groups of variables tied by a unit-coefficient equality encoded as a row
// pair (a, b), (-a, -b) in A. Disjoint by construction (first pair wins).
struct EqGroup {
  std::vector<int> vars;
  Int sum;
};

std::vector<EqGroup> detect_unit_groups(const IntMatrix& a, const IntVector& b) {
  std::vector<EqGroup> groups;
  std::vector<bool> grouped(a.cols(), false);
  for (int i = 0; i < a.rows(); ++i) {
    IntVector row = a.row(i);
    bool unit = true, any = false;
    for (const Int& v : row) {
      if (v != 0 && v != 1) unit = false;
      if (v != 0) any = true;
    }
    if (!unit || !any) continue;
    bool paired = false;
    for (int j = 0; j < a.rows() && !paired; ++j) {
      if (j == i) continue;
      bool neg = true;
      for (int c = 0; c < a.cols(); ++c) {
        if (a(j, c) != -row[c]) {
          neg = false;
          break;
        }
      }
      if (neg && b[j] == -b[i]) paired = true;
    }
    if (!paired) continue;
    EqGroup g;
    g.sum = b[i];
    bool overlap = false;
    for (int c = 0; c < a.cols(); ++c) {
      if (row[c] == 1) {
        if (grouped[c]) overlap = true;
        g.vars.push_back(c);
      }
    }
    if (overlap) continue;
    for (int v : g.vars) grouped[v] = true;
    groups.push_back(std::move(g));
  }
  return groups;
}

struct Candidate {
  Int obj;
  IntVector x;
  IntMatrix origin_c;
  IntVector origin_d;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.obj != b.obj) return a.obj < b.obj;
  return lex_less(a.x, b.x);
}

// Shared, read-only data of one branching run.
struct SearchContext {
  const NormalizedIqp& prob;
  SolveOptions opts;
  VarBounds bounds;
  std::vector<EqGroup> groups;
  std::atomic<long long> visited{0};
  std::atomic<bool> aborted{false};

  explicit SearchContext(const NormalizedIqp& p, const SolveOptions& o)
      : prob(p), opts(o), bounds(derive_bounds(p.aug.A, p.aug.b)), groups(detect_unit_groups(p.aug.A, p.aug.b)) {}

  // Enumeration work inside a node is charged against the node budget in
  // 1024-point slices so a runaway ball search still trips the budget.
  void charge_points(long long points) {
    if (points % 1024 != 0) return;
    if (aborted.load(std::memory_order_relaxed)) throw ResourceExhausted("solver aborted");
    if (++visited > opts.node_budget) {
      aborted.store(true);
      throw ResourceExhausted("solver node budget exceeded");
    }
  }
};

// Effective per-variable intervals at a node: static bounds sharpened by
// single-variable rows of the node's equality system.
struct NodeBounds {
  std::vector<std::optional<Int>> lo, hi;
  bool infeasible = false;
};

NodeBounds node_bounds(const SearchContext& ctx, const IntMatrix& c, const IntVector& d) {
  NodeBounds nb;
  nb.lo = ctx.bounds.lo;
  nb.hi = ctx.bounds.hi;
  for (int i = 0; i < c.rows(); ++i) {
    int nz = -1;
    bool single = true;
    for (int j = 0; j < c.cols(); ++j) {
      if (c(i, j) == 0) continue;
      if (nz >= 0) {
        single = false;
        break;
      }
      nz = j;
    }
    if (!single || nz < 0) continue;
    if (d[i] % c(i, nz) != 0) {
      nb.infeasible = true;
      return nb;
    }
    const Int val = d[i] / c(i, nz);
    if (!nb.lo[nz] || val > *nb.lo[nz]) nb.lo[nz] = val;
    if (!nb.hi[nz] || val < *nb.hi[nz]) nb.hi[nz] = val;
  }
  for (std::size_t j = 0; j < nb.lo.size(); ++j)
    if (nb.lo[j] && nb.hi[j] && *nb.lo[j] > *nb.hi[j]) nb.infeasible = true;
  return nb;
}

// Interval of row^T x over the effective bounds; nullopt side = unbounded.
std::pair<std::optional<Int>, std::optional<Int>> row_range(const IntVector& row,
                                                            const NodeBounds& nb) {
  Int lo = 0, hi = 0;
  bool lo_fin = true, hi_fin = true;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    const auto& l = row[j] > 0 ? nb.lo[j] : nb.hi[j];
    const auto& h = row[j] > 0 ? nb.hi[j] : nb.lo[j];
    if (l)
      lo += row[j] * *l;
    else
      lo_fin = false;
    if (h)
      hi += row[j] * *h;
    else
      hi_fin = false;
  }
  return {lo_fin ? std::optional<Int>(lo) : std::nullopt,
          hi_fin ? std::optional<Int>(hi) : std::nullopt};
}

// Does every feasible point of the node lie in the l1 ball of the given
// radius around x0? Bounds the worst-case distance by per-variable intervals,
// improved on unit-equality groups by a triangle-inequality argument.
bool ball_covers_feasible(const SearchContext& ctx, const NodeBounds& nb, const RatVector& x0,
                          const Int& radius) {
  if (nb.infeasible) return true;  // nothing feasible, subtree is vacuous
  const int n = static_cast<int>(x0.size());
  std::vector<bool> in_group(n, false);
  Rat total = 0;
  for (const EqGroup& g : ctx.groups) {
    Rat interval_sum = 0;
    bool interval_ok = true;
    Rat group_bound = Rat(g.sum);
    bool group_ok = true;
    for (int v : g.vars) {
      if (nb.lo[v] && nb.hi[v]) {
        const Rat dl = rat_abs(Rat(*nb.lo[v]) - x0[v]);
        const Rat dh = rat_abs(Rat(*nb.hi[v]) - x0[v]);
        interval_sum += dl > dh ? dl : dh;
      } else {
        interval_ok = false;
      }
      if (nb.lo[v]) {
        group_bound += -Rat(*nb.lo[v]) + rat_abs(Rat(*nb.lo[v]) - x0[v]);
      } else {
        group_ok = false;
      }
    }
    if (!interval_ok && !group_ok) return false;
    if (interval_ok && group_ok)
      total += interval_sum < group_bound ? interval_sum : group_bound;
    else
      total += interval_ok ? interval_sum : group_bound;
    for (int v : g.vars) in_group[v] = true;
  }
  for (int v = 0; v < n; ++v) {
    if (in_group[v]) continue;
    if (!nb.lo[v] || !nb.hi[v]) return false;
    const Rat dl = rat_abs(Rat(*nb.lo[v]) - x0[v]);
    const Rat dh = rat_abs(Rat(*nb.hi[v]) - x0[v]);
    total += dl > dh ? dl : dh;
  }
  return total <= Rat(radius);
}

// DFS enumeration of { x integer : |x - x0|_1 <= radius, C x = d, A x <= b }.
// Free coordinates are enumerated inside the ball and the effective bounds;
// pivot coordinates are solved exactly through the adjugate of the pivot
// column submatrix. Emits points in deterministic order.
class BallEnumerator {
 public:
  BallEnumerator(SearchContext& ctx, const IntMatrix& c, const IntVector& d,
                 const KernelBasis& kb, const RatVector& x0, const Int& radius,
                 const NodeBounds& nb)
      : ctx_(ctx), c_(c), d_(d), kb_(kb), x0_(x0), radius_(radius), nb_(nb) {
    const int m = c_.rows();
    if (m > 0) {
      std::vector<int> all_rows(m);
      std::iota(all_rows.begin(), all_rows.end(), 0);
      cb_ = c_.select(all_rows, kb_.pivot_cols);
      det_b_ = determinant(cb_);
      adj_b_ = IntMatrix(m, m);
      if (m == 1) {
        adj_b_(0, 0) = 1;
      } else {
        std::vector<int> rows, cols;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            rows.clear();
            cols.clear();
            for (int r = 0; r < m; ++r)
              if (r != i) rows.push_back(r);
            for (int cc = 0; cc < m; ++cc)
              if (cc != j) cols.push_back(cc);
            Int minor = determinant(cb_.select(rows, cols));
            if ((i + j) % 2 != 0) minor = -minor;
            adj_b_(j, i) = minor;
          }
      }
    }
  }

  template <typename Emit>
  void run(long long& points, Emit&& emit) {
    if (nb_.infeasible) return;
    const int n = c_.cols();
    x_.assign(n, Int(0));
    row_partial_.assign(ctx_.prob.aug.A.rows(), Int(0));
    row_inf_.assign(ctx_.prob.aug.A.rows(), 0);
    const IntMatrix& a = ctx_.prob.aug.A;
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < n; ++j) {
        if (a(i, j) == 0) continue;
        auto contrib = min_contrib(i, j);
        if (contrib)
          row_partial_[i] += *contrib;
        else
          ++row_inf_[i];
      }
      if (row_inf_[i] == 0 && row_partial_[i] > ctx_.prob.aug.b[i]) return;
    }
    dfs(0, Rat(radius_), points, emit);
  }

 private:
  std::optional<Int> min_contrib(int row, int var) const {
    const Int& coef = ctx_.prob.aug.A(row, var);
    if (coef > 0) return nb_.lo[var] ? std::optional<Int>(coef * *nb_.lo[var]) : std::nullopt;
    return nb_.hi[var] ? std::optional<Int>(coef * *nb_.hi[var]) : std::nullopt;
  }

  template <typename Emit>
  void dfs(int idx, const Rat& rem, long long& points, Emit&& emit) {
    const IntMatrix& a = ctx_.prob.aug.A;
    if (idx == static_cast<int>(kb_.free_cols.size())) {
      ctx_.charge_points(++points);
      if (!complete_point()) return;
      // exact final checks: ball membership and full feasibility
      if (l1_distance(x_, x0_) > Rat(radius_)) return;
      if (!check_feasible(a, ctx_.prob.aug.b, c_, d_, x_)) return;
      emit(x_);
      return;
    }
    const int v = kb_.free_cols[idx];
    Int lo = rat_ceil(x0_[v] - rem);
    Int hi = rat_floor(x0_[v] + rem);
    if (nb_.lo[v] && *nb_.lo[v] > lo) lo = *nb_.lo[v];
    if (nb_.hi[v] && *nb_.hi[v] < hi) hi = *nb_.hi[v];
    for (Int val = lo; val <= hi; ++val) {
      x_[v] = val;
      const Rat used = rat_abs(Rat(val) - x0_[v]);
      if (used > rem) continue;
      bool pruned = false;
      std::vector<std::pair<int, std::optional<Int>>> undo;
      for (int i = 0; i < a.rows() && !pruned; ++i) {
        if (a(i, v) == 0) continue;
        const auto old = min_contrib(i, v);
        undo.emplace_back(i, old);
        if (old)
          row_partial_[i] += a(i, v) * val - *old;
        else {
          row_partial_[i] += a(i, v) * val;
          --row_inf_[i];
        }
        if (row_inf_[i] == 0 && row_partial_[i] > ctx_.prob.aug.b[i]) pruned = true;
      }
      if (!pruned) dfs(idx + 1, rem - used, points, emit);
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
        const int i = it->first;
        if (it->second)
          row_partial_[i] -= a(i, v) * val - *it->second;
        else {
          row_partial_[i] -= a(i, v) * val;
          ++row_inf_[i];
        }
      }
    }
    x_[v] = 0;
  }

  // Solve the pivot coordinates from the free ones; false when non-integral.
  bool complete_point() {
    const int m = c_.rows();
    if (m == 0) return true;
    IntVector rhs(m);
    for (int i = 0; i < m; ++i) {
      Int s = d_[i];
      for (int f : kb_.free_cols) s -= c_(i, f) * x_[f];
      rhs[i] = s;
    }
    for (int j = 0; j < m; ++j) {
      Int num = 0;
      for (int k = 0; k < m; ++k) num += adj_b_(j, k) * rhs[k];
      if (num % det_b_ != 0) return false;
      x_[kb_.pivot_cols[j]] = num / det_b_;
    }
    return true;
  }

  SearchContext& ctx_;
  const IntMatrix& c_;
  const IntVector& d_;
  const KernelBasis& kb_;
  const RatVector& x0_;
  const Int& radius_;
  const NodeBounds& nb_;
  IntMatrix cb_;
  Int det_b_ = 1;
  IntMatrix adj_b_;
  IntVector x_;
  IntVector row_partial_;
  std::vector<int> row_inf_;
};

class BranchSolver {
 public:
  BranchSolver(SearchContext& ctx) : ctx_(ctx) {}

  void solve_into(std::optional<Candidate>& best, SearchStats& stats) {
    const AugmentedIqp& aug = ctx_.prob.aug;
    if (ctx_.bounds.infeasible) {
      // single-row analysis already proves emptiness; count the root visit
      ++stats.nodes;
      ++stats.leaves;
      return;
    }
    if (ctx_.opts.workers <= 1) {
      visit(aug.C, aug.d, 0, best, stats);
      return;
    }
    // Expand the root once, then split its children across workers. The
    // candidate order is irrelevant: the (objective, lex) merge is a total
    // order, so any partition yields the identical outcome.
    std::vector<std::pair<IntMatrix, IntVector>> jobs;
    visit(aug.C, aug.d, 0, best, stats, &jobs);
    const int w = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(ctx_.opts.workers), std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::optional<Candidate>> bests(w);
    std::vector<SearchStats> statss(w);
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> threads;
    for (int t = 0; t < w; ++t) {
      threads.emplace_back([&, t] {
        try {
          for (std::size_t j = t; j < jobs.size(); j += w)
            visit(jobs[j].first, jobs[j].second, 1, bests[t], statss[t]);
        } catch (...) {
          errors[t] = std::current_exception();
          ctx_.aborted.store(true);
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (int t = 0; t < w; ++t) {
      stats.merge(statss[t]);
      if (bests[t] && (!best || better(*bests[t], *best))) best = *bests[t];
    }
  }

 private:
  void offer(const IntVector& x, const IntMatrix& c, const IntVector& d,
             std::optional<Candidate>& best) {
    const AugmentedIqp& aug = ctx_.prob.aug;
    QIQP_CHECK(check_feasible(aug.A, aug.b, aug.C, aug.d, x), "candidate not feasible");
    Candidate cand{evaluate_objective(aug.Q, x), x, c, d};
    if (!best || better(cand, *best)) best = std::move(cand);
  }

  void visit(const IntMatrix& c, const IntVector& d, int depth, std::optional<Candidate>& best,
             SearchStats& stats, std::vector<std::pair<IntMatrix, IntVector>>* collect = nullptr) {
    if (ctx_.aborted.load(std::memory_order_relaxed)) throw ResourceExhausted("solver aborted");
    if (++ctx_.visited > ctx_.opts.node_budget) {
      ctx_.aborted.store(true);
      throw ResourceExhausted("solver node budget exceeded");
    }
    ++stats.nodes;
    const AugmentedIqp& aug = ctx_.prob.aug;
    const int n = aug.n;
    QIQP_CHECK(depth <= n, "recursion depth exceeds variable count");
    QIQP_CHECK(c.rows() - aug.C.rows() == depth, "depth out of sync with equality rows");
    QIQP_CHECK(rank(c) == c.rows(), "equality system lost full row rank");

    const Int delta = max_abs_subdeterminant(c);
    if (delta > stats.max_delta) stats.max_delta = delta;
    const int r = n - c.rows();

    if (r == 0) {
      ++stats.leaves;
      if (auto x = base_case_solve(c, d, aug.A, aug.b)) offer(*x, c, d, best);
      return;
    }

    const KernelBasis kb = integer_kernel_basis(c);
    const RatVector x0 = c.rows() > 0 ? canonical_solution(c, d) : RatVector(n, Rat(0));

    if (r == 1) {
      // One-dimensional subspace: minimize exactly over the integer points of
      // the line. This subsumes the local search and every branch below.
      ++stats.leaves;
      Int q = 1;
      for (const Rat& e : x0) q = boost::multiprecision::lcm(q, denominator(e));
      RatVector u(n);
      const IntVector y = kb.column(0);
      for (int i = 0; i < n; ++i) u[i] = Rat(y[i]) / Rat(q);
      const LineMinimizeResult lm = minimize_on_line(aug.Q, aug.A, aug.b, u, x0);
      stats.local_points += static_cast<long long>(lm.candidates.size());
      for (const IntVector& x : lm.candidates) offer(x, c, d, best);
      return;
    }

    const Int radius = delta * delta * n;
    const NodeBounds nb = node_bounds(ctx_, c, d);
    BallEnumerator ball(ctx_, c, d, kb, x0, radius, nb);
    ball.run(stats.local_points, [&](const IntVector& x) { offer(x, c, d, best); });

    if (ball_covers_feasible(ctx_, nb, x0, radius)) return;  // search was exhaustive here

    const Int z_formula = Int(n) * n * delta * delta * delta * delta * ctx_.prob.alpha;

    // Shallow case: rows of A independent of C, values restricted to the
    // subrange that a violated kernel move can actually witness.
    for (int j = 0; j < aug.A.rows(); ++j) {
      const IntVector row = aug.A.row(j);
      Int m_bound = 0;
      for (int i = 0; i < kb.dim(); ++i) {
        const Int p = int_abs(dot(row, kb.column(i)));
        if (p > m_bound) m_bound = p;
      }
      if (m_bound == 0) continue;  // row lies in the span of C
      Int vlo = aug.b[j] - m_bound + 1;
      Int vhi = aug.b[j];
      const auto [rlo, rhi] = row_range(row, nb);
      if (rlo && *rlo > vlo) vlo = *rlo;
      if (rhi && *rhi < vhi) vhi = *rhi;
      const Int g = content(row);
      for (Int v = vlo; v <= vhi; ++v) {
        if (v % g != 0) continue;
        IntMatrix cc = c;
        IntVector rr = row;
        for (Int& e : rr) e /= g;
        cc.append_row(rr);
        IntVector dd = d;
        dd.push_back(v / g);
        if (collect)
          collect->emplace_back(std::move(cc), std::move(dd));
        else
          visit(cc, dd, depth + 1, best, stats);
      }
    }

    // Deep case: rows 2 y^T Q for kernel columns with y^T Q independent of C.
    // Values range over [-y^T Q y, y^T Q y]: outside it no deep optimum can
    // satisfy the two-sided growth condition, and a negative y^T Q y means no
    // deep optimum exists at all.
    for (int i = 0; i < kb.dim(); ++i) {
      const IntVector y = kb.column(i);
      IntVector w = mat_vec(aug.Q, y);
      Int b_bound = dot(y, w);  // y^T Q y
      for (Int& e : w) e *= 2;
      bool zero = true;
      for (const Int& e : w)
        if (e != 0) zero = false;
      if (zero) continue;
      Int indep = 0;
      for (int l = 0; l < kb.dim(); ++l) {
        const Int p = int_abs(dot(w, kb.column(l)));
        if (p > indep) indep = p;
      }
      if (indep == 0) continue;  // 2 y^T Q in the span of C
      if (b_bound < 0) continue;
      Int zlo = -b_bound, zhi = b_bound;
      if (z_formula < zhi) {
        zhi = z_formula;
        zlo = -z_formula;
      }
      const auto [rlo, rhi] = row_range(w, nb);
      if (rlo && *rlo > zlo) zlo = *rlo;
      if (rhi && *rhi < zhi) zhi = *rhi;
      const Int g = content(w);
      for (Int z = zlo; z <= zhi; ++z) {
        if (z % g != 0) continue;
        IntMatrix cc = c;
        IntVector rr = w;
        for (Int& e : rr) e /= g;
        cc.append_row(rr);
        IntVector dd = d;
        dd.push_back(z / g);
        if (collect)
          collect->emplace_back(std::move(cc), std::move(dd));
        else
          visit(cc, dd, depth + 1, best, stats);
      }
    }
  }

  SearchContext& ctx_;
};

}  // namespace

RawSolveResult solve_normalized(const NormalizedIqp& prob, const SolveOptions& opts) {
  SearchContext ctx(prob, opts);
  std::optional<Candidate> best;
  RawSolveResult out;
  BranchSolver(ctx).solve_into(best, out.stats);
  if (best) {
    out.feasible = true;
    out.x = best->x;
    out.internal_obj = best->obj;
    out.stats.best_origin_c = best->origin_c;
    out.stats.best_origin_d = best->origin_d;
  }
  return out;
}

SolveResult solve(const Iqp& iqp, const SolveOptions& opts) {
  const NormalizedIqp prob = normalize(iqp);
  RawSolveResult raw = solve_normalized(prob, opts);
  SolveResult res;
  res.stats = std::move(raw.stats);
  if (!raw.feasible) {
    res.outcome = SolveOutcome::infeasible();
    return res;
  }
  res.outcome.status = SolveStatus::Optimal;
  res.outcome.x = prob.to_user(raw.x);
  res.outcome.value = Rat(raw.internal_obj) / 2;
  return res;
}

std::vector<BranchValue> enumerate_shallow_branches(const IntMatrix& c, const IntMatrix& a,
                                                    const IntVector& b, const Int& alpha,
                                                    const Int& delta) {
  std::vector<BranchValue> out;
  const Int width = alpha * a.cols() * delta * delta;
  for (int j = 0; j < a.rows(); ++j) {
    const IntVector row = a.row(j);
    if (!row_independent(c, row)) continue;
    for (Int v = b[j] - width; v <= b[j]; ++v) out.push_back({row, v});
  }
  return out;
}

std::vector<BranchValue> enumerate_deep_branches(const IntMatrix& c, const IntMatrix& q,
                                                 const KernelBasis& kernel, const Int& alpha,
                                                 const Int& delta) {
  std::vector<BranchValue> out;
  const int n = q.cols();
  const Int width = Int(n) * n * delta * delta * delta * delta * alpha;
  for (int i = 0; i < kernel.dim(); ++i) {
    const IntVector y = kernel.column(i);
    IntVector w = mat_vec(q.transpose(), y);  // y^T Q as a row
    for (Int& e : w) e *= 2;
    if (is_zero(w) || !row_independent(c, w)) continue;
    for (Int z = -width; z <= width; ++z) out.push_back({w, z});
  }
  return out;
}

std::vector<IntVector> local_search(const IntMatrix& c, const IntVector& d, const RatVector& x0,
                                    const Int& radius, const IntMatrix& a, const IntVector& b) {
  NormalizedIqp prob;
  prob.aug.n = c.cols();
  prob.aug.Q = IntMatrix(c.cols(), c.cols());
  prob.aug.A = a.rows() > 0 ? a : IntMatrix::empty(c.cols());
  prob.aug.b = b;
  prob.aug.C = c;
  prob.aug.d = d;
  prob.orig_n = c.cols();
  SearchContext ctx(prob, SolveOptions{});
  const KernelBasis kb = integer_kernel_basis(c);
  const NodeBounds nb = node_bounds(ctx, c, d);
  BallEnumerator ball(ctx, c, d, kb, x0, radius, nb);
  std::vector<IntVector> out;
  long long points = 0;
  ball.run(points, [&](const IntVector& x) { out.push_back(x); });
  return out;
}

std::optional<IntVector> base_case_solve(const IntMatrix& c, const IntVector& d,
                                         const IntMatrix& a, const IntVector& b) {
  const auto sol = solve_unique_exact(c, d);
  if (!sol) return std::nullopt;
  IntVector x(sol->size());
  for (std::size_t i = 0; i < sol->size(); ++i) {
    if (!is_integer((*sol)[i])) return std::nullopt;
    x[i] = numerator((*sol)[i]);
  }
  for (int i = 0; i < a.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    if (s > b[i]) return std::nullopt;
  }
  return x;
}

}  // namespace qiqp
