#include "qiqp/model.hpp"

namespace qiqp {

IntMatrix symmetrize(const IntMatrix& q) {
  if (q.rows() != q.cols()) throw std::invalid_argument("symmetrize: matrix not square");
  IntMatrix s(q.rows(), q.cols());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) s(i, j) = q(i, j) + q(j, i);
  return s;
}

EmbedResult embed_linear(const IntMatrix& q_mat, const IntVector& q_lin, const Int& c0) {
  const int n = q_mat.rows();
  if (q_mat.cols() != n) throw std::invalid_argument("embed_linear: Q not square");
  if (static_cast<int>(q_lin.size()) != n)
    throw std::invalid_argument("embed_linear: linear term length mismatch");
  EmbedResult out;
  out.Q = IntMatrix(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.Q(i, j) = q_mat(i, j);
  for (int j = 0; j < n; ++j) out.Q(n, j) = q_lin[j];
  out.Q(n, n) = c0;
  out.c_row = IntVector(n + 1, Int(0));
  out.c_row[n] = 1;
  out.d_value = 1;
  return out;
}

std::pair<IntMatrix, IntVector> reduce_rows(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != static_cast<int>(b.size()))
    throw std::invalid_argument("reduce_rows: bound length mismatch");
  IntMatrix ra = IntMatrix::empty(a.cols());
  IntVector rb;
  for (int i = 0; i < a.rows(); ++i) {
    const IntVector row = a.row(i);
    int found = -1;
    for (int j = 0; j < ra.rows(); ++j) {
      if (ra.row(j) == row) {
        found = j;
        break;
      }
    }
    if (found >= 0) {
      if (b[i] < rb[found]) rb[found] = b[i];
    } else {
      ra.append_row(row);
      rb.push_back(b[i]);
    }
  }
  return {ra, rb};
}

NormalizedIqp normalize(const Iqp& iqp) {
  if (iqp.n < 1) throw std::invalid_argument("normalize: need at least one variable");
  if (iqp.Q.rows() != iqp.n || iqp.Q.cols() != iqp.n)
    throw std::invalid_argument("normalize: Q dimension mismatch");
  if (iqp.A.cols() != iqp.n && iqp.A.rows() > 0)
    throw std::invalid_argument("normalize: A dimension mismatch");
  if (iqp.A.rows() != static_cast<int>(iqp.b.size()))
    throw std::invalid_argument("normalize: b length mismatch");
  if (iqp.linear && static_cast<int>(iqp.linear->size()) != iqp.n)
    throw std::invalid_argument("normalize: linear term length mismatch");

  NormalizedIqp out;
  out.orig_n = iqp.n;
  out.embedded = iqp.linear.has_value() || iqp.constant.has_value();

  IntMatrix q = iqp.Q;
  IntMatrix a = iqp.A.rows() > 0 ? iqp.A : IntMatrix::empty(iqp.n);
  IntVector b = iqp.b;
  int n = iqp.n;
  IntMatrix c = IntMatrix::empty(n);
  IntVector d;

  if (out.embedded) {
    const IntVector qlin = iqp.linear ? *iqp.linear : IntVector(iqp.n, Int(0));
    const Int c0 = iqp.constant ? *iqp.constant : Int(0);
    EmbedResult er = embed_linear(q, qlin, c0);
    q = er.Q;
    n = iqp.n + 1;
    IntMatrix wide(a.rows(), n);
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < iqp.n; ++j) wide(i, j) = a(i, j);
    a = wide;
    c = IntMatrix::empty(n);
    c.append_row(er.c_row);
    d.push_back(er.d_value);
  }

  q = symmetrize(q);
  auto [ra, rb] = reduce_rows(a, b);

  out.aug.n = n;
  out.aug.Q = q;
  out.aug.A = ra;
  out.aug.b = rb;
  out.aug.C = c;
  out.aug.d = d;
  out.alpha = q.max_abs_entry();
  if (ra.max_abs_entry() > out.alpha) out.alpha = ra.max_abs_entry();
  return out;
}

Int evaluate_objective(const IntMatrix& q, const IntVector& x) {
  if (q.rows() != q.cols() || q.rows() != static_cast<int>(x.size()))
    throw std::invalid_argument("evaluate_objective: dimension mismatch");
  Int s = 0;
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) s += x[i] * q(i, j) * x[j];
  return s;
}

Int evaluate_user_objective(const Iqp& iqp, const IntVector& x) {
  Int s = evaluate_objective(iqp.Q, x);
  if (iqp.linear) s += dot(*iqp.linear, x);
  if (iqp.constant) s += *iqp.constant;
  return s;
}

bool check_feasible(const IntMatrix& a, const IntVector& b, const IntMatrix& c,
                    const IntVector& d, const IntVector& x) {
  if (a.rows() > 0 && a.cols() != static_cast<int>(x.size()))
    throw std::invalid_argument("check_feasible: dimension mismatch");
  for (int i = 0; i < a.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    if (s > b[i]) return false;
  }
  for (int i = 0; i < c.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < c.cols(); ++j) s += c(i, j) * x[j];
    if (s != d[i]) return false;
  }
  return true;
}

std::optional<int> classify_solution(const IntVector& x, const IntMatrix& a, const IntVector& b,
                                     const IntMatrix& c, const IntVector& d,
                                     const KernelBasis& kernel) {
  if (!check_feasible(a, b, c, d, x))
    throw std::invalid_argument("classify_solution: point not feasible");
  for (int i = 0; i < kernel.dim(); ++i) {
    const IntVector y = kernel.column(i);
    IntVector plus = x, minus = x;
    for (std::size_t j = 0; j < x.size(); ++j) {
      plus[j] += y[j];
      minus[j] -= y[j];
    }
    if (!check_feasible(a, b, c, d, plus) || !check_feasible(a, b, c, d, minus)) return i;
  }
  return std::nullopt;
}

}  // namespace qiqp
