#include "qiqp/unbounded.hpp"

#include "qiqp/univariate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qiqp {

std::vector<std::vector<FamilyRowMeta>> ConstraintFamily::row_alternatives(int index) const {
  std::vector<std::vector<FamilyRowMeta>> out;
  int cur = index;
  while (cur >= 0) {
    const FamilyEntry& e = entries[cur];
    if (e.parent < 0) {
      // root rows are pinned constants, stored positionally in last_row_alts
      std::vector<std::vector<FamilyRowMeta>> head;
      for (const FamilyRowMeta& m : e.last_row_alts) head.push_back({m});
      out.insert(out.begin(), head.begin(), head.end());
    } else {
      out.insert(out.begin(), e.last_row_alts);
    }
    cur = e.parent;
  }
  return out;
}

ConstraintFamily collect_constraint_family(const IntMatrix& q, const IntMatrix& a,
                                           const IntMatrix& c_init, const IntVector& d_init,
                                           long long entry_budget) {
  const int n = q.cols();
  if (c_init.cols() != n) throw std::invalid_argument("collect_constraint_family: width mismatch");
  ConstraintFamily fam;
  FamilyEntry root;
  root.c = c_init;
  for (const Int& v : d_init) {
    FamilyRowMeta m;
    m.kind = FamilyRowMeta::Kind::Fixed;
    m.fixed_value = v;
    root.last_row_alts.push_back(m);
  }
  root.terminal = c_init.rows() == n;
  fam.entries.push_back(root);
  std::map<IntMatrix, int> seen;
  seen.emplace(c_init, 0);

  std::vector<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.back();
    queue.pop_back();
    const IntMatrix c = fam.entries[cur].c;
    if (c.rows() == n) continue;
    const KernelBasis kb = integer_kernel_basis(c);

    const auto add_child = [&](const IntVector& row, const FamilyRowMeta& meta) {
      IntMatrix child = c;
      child.append_row(row);
      const auto it = seen.find(child);
      if (it != seen.end()) {
        FamilyEntry& e = fam.entries[it->second];
        QIQP_CHECK(e.parent == cur, "family dedup across distinct prefixes");
        if (std::find(e.last_row_alts.begin(), e.last_row_alts.end(), meta) ==
            e.last_row_alts.end())
          e.last_row_alts.push_back(meta);
        return;
      }
      if (static_cast<long long>(fam.entries.size()) >= entry_budget)
        throw ResourceExhausted("collect_constraint_family: entry budget exceeded");
      FamilyEntry e;
      e.c = child;
      e.parent = cur;
      e.last_row_alts.push_back(meta);
      e.terminal = child.rows() == n;
      fam.entries.push_back(e);
      const int idx = static_cast<int>(fam.entries.size()) - 1;
      seen.emplace(std::move(child), idx);
      queue.push_back(idx);
    };

    for (int j = 0; j < a.rows(); ++j) {
      const IntVector row = a.row(j);
      Int m_bound = 0;
      for (int i = 0; i < kb.dim(); ++i) {
        const Int p = int_abs(dot(row, kb.column(i)));
        if (p > m_bound) m_bound = p;
      }
      if (m_bound == 0) continue;  // dependent row
      FamilyRowMeta meta;
      meta.kind = FamilyRowMeta::Kind::FromA;
      meta.a_row = j;
      meta.m_bound = m_bound;
      add_child(row, meta);
    }
    for (int i = 0; i < kb.dim(); ++i) {
      const IntVector y = kb.column(i);
      IntVector w = mat_vec(q, y);  // q is symmetric here: y^T Q as a row
      const Int b_bound = dot(y, w);
      for (Int& e : w) e *= 2;
      if (is_zero(w)) continue;
      Int indep = 0;
      for (int l = 0; l < kb.dim(); ++l) {
        const Int p = int_abs(dot(w, kb.column(l)));
        if (p > indep) indep = p;
      }
      if (indep == 0) continue;
      FamilyRowMeta meta;
      meta.kind = FamilyRowMeta::Kind::Deep;
      meta.b_bound = b_bound;
      add_child(w, meta);
    }
  }

  fam.delta_hat = 1;
  for (const FamilyEntry& e : fam.entries) {
    const Int d = max_abs_subdeterminant(e.c);
    if (d > fam.delta_hat) fam.delta_hat = d;
  }
  return fam;
}

ConstraintFamily collect_constraint_family(const IntMatrix& q, const IntMatrix& a) {
  return collect_constraint_family(q, a, IntMatrix::empty(q.cols()), {});
}

namespace {

// Integer vectors z with |z|_1 <= limit in lexicographic order.
bool enumerate_l1_ball(int dim, const Int& limit, IntVector& z, int idx,
                       const Int& used, const std::function<bool(const IntVector&)>& visit) {
  if (idx == dim) return visit(z);
  const Int rem = limit - used;
  for (Int v = -rem; v <= rem; ++v) {
    z[idx] = v;
    if (!enumerate_l1_ball(dim, limit, z, idx + 1, used + int_abs(v), visit)) return false;
  }
  z[idx] = 0;
  return true;
}

}  // namespace

void enumerate_candidate_vectors(const IntMatrix& c, const Int& delta_hat, const Int& alpha,
                                 int n, const std::function<bool(const RatVector&)>& visit) {
  const Int v0_bound = Int(n) * n * delta_hat * delta_hat * delta_hat * delta_hat * alpha;
  const Int q_den = c.rows() > 0 ? determinant(mat_mul(c, c.transpose())) : Int(1);
  const Int v1_limit = delta_hat * delta_hat * n * int_abs(q_den);

  IntVector v0(c.rows(), Int(0));
  IntVector z(n, Int(0));
  const std::function<bool(int)> loop_v0 = [&](int idx) -> bool {
    if (idx == c.rows()) {
      RatVector base(n, Rat(0));
      if (c.rows() > 0) base = canonical_solution(c, v0);
      return enumerate_l1_ball(n, v1_limit, z, 0, Int(0), [&](const IntVector& zz) {
        RatVector v = base;
        for (int i = 0; i < n; ++i) v[i] += Rat(zz[i]) / Rat(q_den);
        return visit(v);
      });
    }
    for (Int t = -v0_bound; t <= v0_bound; ++t) {
      v0[idx] = t;
      if (!loop_v0(idx + 1)) return false;
    }
    v0[idx] = 0;
    return true;
  };
  loop_v0(0);
}

namespace {

struct ComboBudget {
  long long remaining;
  bool exhausted = false;
  bool spend(long long amount = 1) {
    remaining -= amount;
    if (remaining < 0) exhausted = true;
    return !exhausted;
  }
};

// v1 offsets live in the kernel of C: enumerate z in ker(C) with |z|_1 <= limit
// via free coordinates, pivot coordinates solved exactly.
std::vector<IntVector> kernel_ball(const IntMatrix& c, const KernelBasis& kb, const Int& limit,
                                   ComboBudget& budget) {
  const int n = c.cols();
  std::vector<IntVector> out;
  if (kb.dim() == 0) {
    out.emplace_back(n, Int(0));
    return out;
  }
  IntMatrix cb;
  Int det_b = 1;
  const int m = c.rows();
  if (m > 0) {
    std::vector<int> all_rows(m);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    cb = c.select(all_rows, kb.pivot_cols);
    det_b = determinant(cb);
  }
  IntVector z(n, Int(0));
  const std::function<bool(int, Int)> dfs = [&](int idx, Int used) -> bool {
    if (!budget.spend()) return false;
    if (idx == static_cast<int>(kb.free_cols.size())) {
      if (m > 0) {
        // solve pivot coordinates of C z = 0 by Cramer on the pivot block
        IntVector rhs(m, Int(0));
        for (int i = 0; i < m; ++i)
          for (int f : kb.free_cols) rhs[i] -= c(i, f) * z[f];
        Int total = used;
        for (int j = 0; j < m; ++j) {
          IntMatrix rep = cb;
          for (int i = 0; i < m; ++i) rep(i, j) = rhs[i];
          const Int num = determinant(rep);
          if (num % det_b != 0) return true;  // not an integer kernel point
          z[kb.pivot_cols[j]] = num / det_b;
          total += int_abs(z[kb.pivot_cols[j]]);
        }
        if (total > limit) return true;
      }
      out.push_back(z);
      return true;
    }
    const int f = kb.free_cols[idx];
    for (Int v = -(limit - used); v <= limit - used; ++v) {
      z[f] = v;
      if (!dfs(idx + 1, used + int_abs(v))) return false;
    }
    z[f] = 0;
    return true;
  };
  dfs(0, Int(0));
  return out;
}

}  // namespace

TriState check_unbounded(const NormalizedIqp& prob, long long combo_budget,
                         long long family_budget) {
  const AugmentedIqp& aug = prob.aug;
  const int n = aug.n;
  const int m_orig = aug.A.rows();

  // A' = [A; I; -I]: the box rows carry the growing bound lambda.
  IntMatrix a_ext = aug.A;
  for (int i = 0; i < n; ++i) {
    IntVector row(n, Int(0));
    row[i] = 1;
    a_ext.append_row(row);
  }
  for (int i = 0; i < n; ++i) {
    IntVector row(n, Int(0));
    row[i] = -1;
    a_ext.append_row(row);
  }

  ConstraintFamily fam;
  try {
    fam = collect_constraint_family(aug.Q, a_ext, aug.C, aug.d, family_budget);
  } catch (const ResourceExhausted&) {
    return TriState::Unknown;
  }

  ComboBudget budget{combo_budget};

  for (std::size_t ei = 0; ei < fam.entries.size(); ++ei) {
    const IntMatrix& c = fam.entries[ei].c;
    if (c.rows() == 0) continue;  // no lambda dependence without rows
    const auto alts = fam.entries[ei].row_alternatives(static_cast<int>(ei));
    const int rows = c.rows();

    // value sets per row alternative: the right-hand side entry is
    // const + offset (+ lambda when the row is a box row)
    struct RowChoice {
      bool lambda = false;
      std::vector<Int> values;
    };
    std::vector<std::vector<RowChoice>> choices(rows);
    for (int r = 0; r < rows; ++r) {
      const IntVector row = c.row(r);
      const Int g = content(row);
      for (const FamilyRowMeta& meta : alts[r]) {
        RowChoice rc;
        switch (meta.kind) {
          case FamilyRowMeta::Kind::Fixed:
            rc.values.push_back(meta.fixed_value);
            break;
          case FamilyRowMeta::Kind::FromA: {
            rc.lambda = meta.a_row >= m_orig;
            const Int base = meta.a_row < m_orig ? aug.b[meta.a_row] : Int(0);
            for (Int v = base - meta.m_bound + 1; v <= base; ++v)
              if (v % g == 0) rc.values.push_back(v);
            break;
          }
          case FamilyRowMeta::Kind::Deep: {
            if (meta.b_bound < 0) break;
            for (Int v = -meta.b_bound; v <= meta.b_bound; ++v)
              if (v % g == 0) rc.values.push_back(v);
            break;
          }
        }
        if (!rc.values.empty()) choices[r].push_back(std::move(rc));
      }
      if (choices[r].empty()) goto next_entry;  // no realizable right-hand side
    }

    {
      const KernelBasis kb = integer_kernel_basis(c);
      Int radius = kb.delta * kb.delta * n;
      {
        Int l1_sum = 0;
        for (int i = 0; i < kb.dim(); ++i) l1_sum += l1_norm(kb.column(i));
        if (l1_sum > radius) radius = l1_sum;
      }

      std::vector<int> pick(rows, 0);
      while (true) {
        if (!budget.spend()) return TriState::Unknown;
        IntVector d1(rows, Int(0));
        bool any_lambda = false;
        for (int r = 0; r < rows; ++r) {
          if (choices[r][pick[r]].lambda) {
            d1[r] = 1;
            any_lambda = true;
          }
        }
        if (any_lambda) {
          const RatVector u = canonical_solution(c, d1);
          Rat qa = 0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) qa += u[i] * Rat(aug.Q(i, j)) * u[j];
          bool open_above = true, open_below = true;
          for (int i = 0; i < m_orig; ++i) {
            Rat s = 0;
            for (int j = 0; j < n; ++j) s += Rat(aug.A(i, j)) * u[j];
            if (s > 0) open_above = false;
            if (s < 0) open_below = false;
          }
          if (qa <= 0 && (open_above || open_below)) {
            const Int q_den = determinant(mat_mul(c, c.transpose()));
            const auto v1s = kernel_ball(c, kb, radius * int_abs(q_den), budget);
            if (budget.exhausted) return TriState::Unknown;
            // iterate value combinations for the non-lambda part
            std::vector<int> vidx(rows, 0);
            while (true) {
              IntVector dconst(rows);
              for (int r = 0; r < rows; ++r)
                dconst[r] = choices[r][pick[r]].values[vidx[r]];
              const RatVector base = canonical_solution(c, dconst);
              for (const IntVector& z : v1s) {
                if (!budget.spend()) return TriState::Unknown;
                RatVector w = base;
                for (int i = 0; i < n; ++i) w[i] += Rat(z[i]) / Rat(q_den);
                const auto line = integer_line(u, w);
                if (!line) continue;
                IntervalZ itv;
                for (int i = 0; i < m_orig && !itv.empty; ++i) {
                  const IntVector row = aug.A.row(i);
                  const Int c1 = dot(row, line->step);
                  const Int c0 = dot(row, line->anchor);
                  if (c1 == 0) {
                    if (c0 > aug.b[i]) itv.empty = true;
                  } else if (c1 > 0) {
                    itv.clip_hi(floor_div(aug.b[i] - c0, c1));
                  } else {
                    itv.clip_lo(ceil_div(aug.b[i] - c0, c1));
                  }
                }
                if (itv.empty) continue;
                const IntVector qstep = mat_vec(aug.Q, line->step);
                const Int la = dot(line->step, qstep);
                if (la < 0) {
                  if (!itv.lo || !itv.hi) return TriState::True;
                  continue;
                }
                if (la > 0) continue;
                const Int lb = 2 * dot(line->anchor, qstep);
                if (lb < 0 && !itv.hi) return TriState::True;
                if (lb > 0 && !itv.lo) return TriState::True;
              }
              int r = rows - 1;
              while (r >= 0 &&
                     ++vidx[r] == static_cast<int>(choices[r][pick[r]].values.size())) {
                vidx[r] = 0;
                --r;
              }
              if (r < 0) break;
            }
          }
        }
        int r = rows - 1;
        while (r >= 0 && ++pick[r] == static_cast<int>(choices[r].size())) {
          pick[r] = 0;
          --r;
        }
        if (r < 0) break;
      }
    }
  next_entry:;
  }
  return TriState::False;
}

std::optional<RayCertificate> ray_certificate(const NormalizedIqp& prob, const Int& bound,
                                              long long work_cap) {
  const AugmentedIqp& aug = prob.aug;
  const int n = aug.n;
  Int space = 1;
  for (int i = 0; i < n; ++i) {
    space *= 2 * bound + 1;
    // the s == 0 case nests two box scans, so keep the square affordable
    if (space * space > work_cap) return std::nullopt;  // fast path only
  }

  const auto next_point = [&](IntVector& x) -> bool {
    int i = n - 1;
    while (i >= 0 && x[i] == bound) {
      x[i] = -bound;
      --i;
    }
    if (i < 0) return false;
    ++x[i];
    return true;
  };

  std::optional<IntVector> feasible_cache;
  const auto first_feasible = [&]() -> std::optional<IntVector> {
    if (feasible_cache) return feasible_cache;
    IntVector x(n, -bound);
    do {
      if (check_feasible(aug.A, aug.b, aug.C, aug.d, x)) {
        feasible_cache = x;
        return feasible_cache;
      }
    } while (next_point(x));
    return std::nullopt;
  };

  IntVector u(n, -bound);
  do {
    if (is_zero(u)) continue;
    if (!is_zero(mat_vec(aug.C, u))) continue;
    bool recession = true;
    for (int i = 0; i < aug.A.rows() && recession; ++i) {
      Int s = 0;
      for (int j = 0; j < n; ++j) s += aug.A(i, j) * u[j];
      if (s > 0) recession = false;
    }
    if (!recession) continue;
    const IntVector qu = mat_vec(aug.Q, u);
    const Int s = dot(u, qu);
    if (s > 0) continue;
    if (s < 0) {
      if (const auto x = first_feasible()) return RayCertificate{*x, u};
      return std::nullopt;  // no feasible point anywhere in the box
    }
    // s == 0: need a feasible x with strictly decreasing linear part
    IntVector x(n, -bound);
    do {
      if (2 * dot(x, qu) >= 0) continue;
      if (check_feasible(aug.A, aug.b, aug.C, aug.d, x)) return RayCertificate{x, u};
    } while (next_point(x));
  } while (next_point(u));
  return std::nullopt;
}

std::optional<std::pair<IntVector, IntVector>> ray_certificate(const Iqp& iqp, const Int& bound) {
  const NormalizedIqp prob = normalize(iqp);
  const auto cert = ray_certificate(prob, bound);
  if (!cert) return std::nullopt;
  return std::make_pair(prob.to_user(cert->x), prob.to_user(cert->direction));
}

StatusResult solve_with_status(const Iqp& iqp, const StatusOptions& opts) {
  const NormalizedIqp prob = normalize(iqp);
  StatusResult out;

  if (const auto cert = ray_certificate(prob, opts.ray_bound)) {
    out.status = SolveStatus::Unbounded;
    out.x = prob.to_user(cert->x);
    return out;
  }

  RawSolveResult raw = solve_normalized(prob, opts.solve);
  out.stats = std::move(raw.stats);
  if (!raw.feasible) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  out.x = prob.to_user(raw.x);
  out.value = Rat(raw.internal_obj) / 2;

  switch (check_unbounded(prob, opts.combo_budget, opts.family_budget)) {
    case TriState::True:
      out.status = SolveStatus::Unbounded;
      out.value.reset();
      break;
    case TriState::False:
      out.status = SolveStatus::Optimal;
      break;
    case TriState::Unknown:
      out.status = SolveStatus::FeasibleOnly;
      break;
  }
  return out;
}

}  // namespace qiqp
