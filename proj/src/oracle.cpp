#include "qiqp/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace qiqp {

namespace {

// Deliberately separate from model.cpp: the oracle keeps its own evaluation
// and feasibility code paths.
Int naive_objective(const Iqp& iqp, const IntVector& x) {
  Int s = 0;
  for (int i = 0; i < iqp.n; ++i)
    for (int j = 0; j < iqp.n; ++j) s += iqp.Q(i, j) * x[i] * x[j];
  if (iqp.linear)
    for (int i = 0; i < iqp.n; ++i) s += (*iqp.linear)[i] * x[i];
  if (iqp.constant) s += *iqp.constant;
  return s;
}

bool naive_feasible(const Iqp& iqp, const IntMatrix* c, const IntVector* d, const IntVector& x) {
  for (int i = 0; i < iqp.A.rows(); ++i) {
    Int lhs = 0;
    for (int j = 0; j < iqp.n; ++j) lhs += iqp.A(i, j) * x[j];
    if (lhs > iqp.b[i]) return false;
  }
  if (c) {
    for (int i = 0; i < c->rows(); ++i) {
      Int lhs = 0;
      for (int j = 0; j < c->cols(); ++j) lhs += (*c)(i, j) * x[j];
      if (lhs != (*d)[i]) return false;
    }
  }
  return true;
}

}  // namespace

SolveOutcome brute_force_iqp(const Iqp& iqp, const Box& box, const IntMatrix* c,
                             const IntVector* d) {
  if (static_cast<int>(box.lo.size()) != iqp.n || static_cast<int>(box.hi.size()) != iqp.n)
    throw std::invalid_argument("brute_force_iqp: box dimension mismatch");
  Int volume = 1;
  for (int i = 0; i < iqp.n; ++i) {
    if (box.lo[i] > box.hi[i]) throw std::invalid_argument("brute_force_iqp: empty box side");
    volume *= box.hi[i] - box.lo[i] + 1;
    if (volume > 10'000'000) throw ResourceExhausted("brute_force_iqp: box too large");
  }

  SolveOutcome out = SolveOutcome::infeasible();
  IntVector x = box.lo;
  bool found = false;
  Int best_obj = 0;
  while (true) {
    if (naive_feasible(iqp, c, d, x)) {
      const Int obj = naive_objective(iqp, x);
      if (!found || obj < best_obj) {  // lex order of enumeration breaks ties
        found = true;
        best_obj = obj;
        out.x = x;
      }
    }
    int i = iqp.n - 1;
    while (i >= 0 && x[i] == box.hi[i]) {
      x[i] = box.lo[i];
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
  if (found) {
    out.status = SolveStatus::Optimal;
    out.value = Rat(best_obj);
  }
  return out;
}

std::pair<Arrangement, Int> brute_force_ola(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 9) throw ResourceExhausted("brute_force_ola: more than 9 vertices");
  Arrangement best;
  best.position.resize(n);
  std::iota(best.position.begin(), best.position.end(), 1);
  if (n == 0) return {best, Int(0)};

  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 1);
  bool found = false;
  Int best_cost = 0;
  do {
    Int cost = 0;
    for (const auto& [u, v] : g.edges()) {
      const int diff = pos[u] - pos[v];
      cost += diff < 0 ? -diff : diff;
    }
    if (!found || cost < best_cost) {  // first in lex order wins ties
      found = true;
      best_cost = cost;
      best.position = pos;
    }
  } while (std::next_permutation(pos.begin(), pos.end()));
  return {best, best_cost};
}

}  // namespace qiqp
