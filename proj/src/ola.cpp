#include "qiqp/ola.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <thread>

namespace qiqp {

namespace {

void cover_dfs(const Graph& g, int k_max, std::vector<int>& chosen, std::vector<bool>& in,
               std::optional<std::vector<int>>& best) {
  int eu = -1, ev = -1;
  for (const auto& [u, v] : g.edges()) {
    if (!in[u] && !in[v]) {
      eu = u;
      ev = v;
      break;
    }
  }
  if (eu < 0) {
    std::vector<int> cover = chosen;
    std::sort(cover.begin(), cover.end());
    if (!best || cover.size() < best->size() || (cover.size() == best->size() && cover < *best))
      best = cover;
    return;
  }
  if (static_cast<int>(chosen.size()) >= k_max) return;
  for (int pick : {eu, ev}) {
    chosen.push_back(pick);
    in[pick] = true;
    cover_dfs(g, k_max, chosen, in, best);
    in[pick] = false;
    chosen.pop_back();
  }
}

}  // namespace

std::optional<std::vector<int>> min_vertex_cover(const Graph& g, int k_max) {
  if (k_max < 0) return std::nullopt;
  std::optional<std::vector<int>> best;
  std::vector<int> chosen;
  std::vector<bool> in(g.vertex_count(), false);
  cover_dfs(g, k_max, chosen, in, best);
  return best;
}

TypePartition partition_types(const Graph& g, const std::vector<int>& cover) {
  TypePartition tp;
  tp.cover = cover;
  std::sort(tp.cover.begin(), tp.cover.end());
  if (tp.cover.size() > 62) throw std::invalid_argument("partition_types: cover too large");
  std::vector<int> cover_index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < tp.cover.size(); ++i) cover_index[tp.cover[i]] = static_cast<int>(i);

  std::map<std::uint64_t, std::vector<int>> by_mask;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (cover_index[v] >= 0) continue;
    std::uint64_t mask = 0;
    for (int u : g.neighbors(v)) {
      if (cover_index[u] < 0)
        throw std::invalid_argument("partition_types: edge outside the cover");
      mask |= std::uint64_t(1) << cover_index[u];
    }
    by_mask[mask].push_back(v);
  }
  for (auto& [mask, members] : by_mask) {
    tp.type_masks.push_back(mask);
    tp.members.push_back(members);  // vertex order is already ascending
  }
  return tp;
}

int force(std::uint64_t s, int gap, int k) {
  int right = 0, left = 0;
  for (int j = 1; j <= k; ++j) {
    if (!(s >> (j - 1) & 1)) continue;
    if (j > gap)
      ++right;
    else
      ++left;
  }
  return right - left;
}

int f_count(int i, int j, int k) {
  (void)k;
  return j >= i + 1 ? j - i - 1 : i - j;
}

int g_indicator(int i, int j, std::uint64_t s, int i2, std::uint64_t s2, int k) {
  if (!(s >> (j - 1) & 1)) return 0;
  if (i2 != i) {
    if (j >= i + 1) return (i + 1 <= i2 && i2 <= j - 1) ? 1 : 0;
    return (j <= i2 && i2 <= i - 1) ? 1 : 0;
  }
  if (s2 == s) return 0;
  const auto key = [&](std::uint64_t m) { return std::pair<int, std::uint64_t>(force(m, i, k), m); };
  if (j >= i + 1) return key(s2) > key(s) ? 1 : 0;
  return key(s2) < key(s) ? 1 : 0;
}

namespace {

// Permuted-order view of a partition: masks over positions 1..k for one cover
// permutation, neighborless vertices separated out.
struct PermutedTypes {
  std::vector<std::uint64_t> masks;            // ascending
  std::vector<std::vector<int>> members;       // aligned
  std::vector<int> neighborless;               // mask-0 vertices, ascending ids
};

PermutedTypes permuted_types(const TypePartition& tp, const std::vector<int>& perm) {
  const int k = static_cast<int>(tp.cover.size());
  std::vector<int> pos(k);  // cover index -> 1-based permuted position
  for (int t = 0; t < k; ++t) pos[perm[t]] = t + 1;

  PermutedTypes out;
  std::map<std::uint64_t, std::vector<int>> by_mask;
  for (std::size_t t = 0; t < tp.type_masks.size(); ++t) {
    if (tp.type_masks[t] == 0) {
      out.neighborless = tp.members[t];
      continue;
    }
    std::uint64_t m = 0;
    for (int i = 0; i < k; ++i)
      if (tp.type_masks[t] >> i & 1) m |= std::uint64_t(1) << (pos[i] - 1);
    by_mask[m] = tp.members[t];
  }
  for (auto& [mask, members] : by_mask) {
    out.masks.push_back(mask);
    out.members.push_back(members);
  }
  return out;
}

}  // namespace

OlaIqp build_ola_iqp(const Graph& g, const TypePartition& partition,
                     const std::vector<int>& perm) {
  const int k = static_cast<int>(partition.cover.size());
  if (static_cast<int>(perm.size()) != k)
    throw std::invalid_argument("build_ola_iqp: permutation size mismatch");
  OlaIqp out;
  out.k = k;
  const PermutedTypes pt = permuted_types(partition, perm);
  out.type_masks = pt.masks;
  out.type_members = pt.members;
  const int t_count = static_cast<int>(pt.masks.size());
  const int gaps = k + 1;
  const int v_count = t_count * gaps;
  if (v_count == 0) return out;  // no typed vertices: nothing to optimize

  std::vector<int> pos(k);
  for (int t = 0; t < k; ++t) pos[perm[t]] = t + 1;
  std::vector<bool> in_cover(g.vertex_count(), false);
  for (int c : partition.cover) in_cover[c] = true;

  // Cover-cover edges: a constant plus one count per gap they span.
  Int const_term = Int(g.edge_count());
  std::vector<Int> gap_weight(gaps, Int(0));
  std::vector<int> vertex_pos(g.vertex_count(), 0);
  for (std::size_t i = 0; i < partition.cover.size(); ++i)
    vertex_pos[partition.cover[i]] = pos[i];
  for (const auto& [u, v] : g.edges()) {
    if (!in_cover[u] || !in_cover[v]) continue;
    const int p = std::min(vertex_pos[u], vertex_pos[v]);
    const int q = std::max(vertex_pos[u], vertex_pos[v]);
    const_term += q - p - 1;
    for (int x = p; x <= q - 1; ++x) gap_weight[x] += 1;
  }

  for (int t = 0; t < t_count; ++t)
    for (int i = 0; i < gaps; ++i) out.var_keys.emplace_back(pt.masks[t], i);

  Iqp iqp;
  iqp.n = v_count;
  iqp.Q = IntMatrix(v_count, v_count);
  IntVector lin(v_count, Int(0));

  for (int t = 0; t < t_count; ++t) {
    const std::uint64_t s = pt.masks[t];
    const int s_size = std::popcount(s);
    for (int i = 0; i < gaps; ++i) {
      const int v = t * gaps + i;
      iqp.Q(v, v) = s_size;  // doubled binomial: |S| * (x^2 - x) / ... quadratic part
      Int l = 2 * gap_weight[i] - s_size;
      for (int j = 1; j <= k; ++j) {
        if (!(s >> (j - 1) & 1)) continue;
        l += 2 * f_count(i, j, k);
        for (int t2 = 0; t2 < t_count; ++t2) {
          for (int i2 = 0; i2 < gaps; ++i2) {
            if (t2 == t && i2 == i) continue;
            if (g_indicator(i, j, s, i2, pt.masks[t2], k))
              iqp.Q(v, t2 * gaps + i2) += 2;
          }
        }
      }
      lin[v] = l;
    }
  }
  iqp.linear = lin;
  iqp.constant = 2 * const_term;

  // Eq-(4) pairs then Eq-(3) nonnegativity.
  iqp.A = IntMatrix::empty(v_count);
  for (int t = 0; t < t_count; ++t) {
    IntVector row(v_count, Int(0));
    for (int i = 0; i < gaps; ++i) row[t * gaps + i] = 1;
    const Int size = Int(pt.members[t].size());
    iqp.A.append_row(row);
    iqp.b.push_back(size);
    for (Int& e : row) e = -e;
    iqp.A.append_row(row);
    iqp.b.push_back(-size);
  }
  for (int v = 0; v < v_count; ++v) {
    IntVector row(v_count, Int(0));
    row[v] = -1;
    iqp.A.append_row(row);
    iqp.b.push_back(Int(0));
  }
  out.iqp = std::move(iqp);
  return out;
}

Arrangement reconstruct_arrangement(const Graph& g, const TypePartition& partition,
                                    const std::vector<int>& perm, const IntVector& assignment) {
  const int k = static_cast<int>(partition.cover.size());
  const PermutedTypes pt = permuted_types(partition, perm);
  const int t_count = static_cast<int>(pt.masks.size());
  const int gaps = k + 1;
  if (static_cast<int>(assignment.size()) != t_count * gaps)
    throw std::invalid_argument("reconstruct_arrangement: assignment size mismatch");
  for (const Int& v : assignment)
    if (v < 0) throw std::invalid_argument("reconstruct_arrangement: negative count");
  for (int t = 0; t < t_count; ++t) {
    Int sum = 0;
    for (int i = 0; i < gaps; ++i) sum += assignment[t * gaps + i];
    if (sum != Int(pt.members[t].size()))
      throw std::invalid_argument("reconstruct_arrangement: counts do not sum to type size");
  }

  Arrangement arr;
  arr.position.assign(g.vertex_count(), 0);
  std::vector<std::size_t> cursor(t_count, 0);
  int next = 1;
  for (int i = 0; i < gaps; ++i) {
    std::vector<std::pair<std::pair<int, std::uint64_t>, int>> blocks;
    for (int t = 0; t < t_count; ++t)
      blocks.push_back({{force(pt.masks[t], i, k), pt.masks[t]}, t});
    std::sort(blocks.begin(), blocks.end());
    for (const auto& [key, t] : blocks) {
      const Int count = assignment[t * gaps + i];
      for (Int c = 0; c < count; ++c) arr.position[pt.members[t][cursor[t]++]] = next++;
    }
    if (i < k) arr.position[partition.cover[perm[i]]] = next++;
  }
  for (int v : pt.neighborless) arr.position[v] = next++;
  QIQP_CHECK(next == g.vertex_count() + 1 && arr.valid(),
             "reconstructed arrangement is not a bijection");
  return arr;
}

std::optional<OlaResult> solve_ola(const Graph& g, int k_max, const SolveOptions& opts) {
  const auto cover = min_vertex_cover(g, k_max);
  if (!cover) return std::nullopt;
  const TypePartition partition = partition_types(g, *cover);
  const int k = static_cast<int>(cover->size());

  OlaResult best;
  best.cover = *cover;
  if (k == 0) {
    best.arrangement.position.resize(g.vertex_count());
    std::iota(best.arrangement.position.begin(), best.arrangement.position.end(), 1);
    best.cost = 0;
    return best;
  }

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  struct PerPerm {
    Int cost;
    Arrangement arr;
    SearchStats stats;
  };
  std::vector<PerPerm> results(perms.size());
  std::vector<std::exception_ptr> errors(perms.size());

  const auto solve_one = [&](std::size_t p) {
    const OlaIqp oiqp = build_ola_iqp(g, partition, perms[p]);
    IntVector assignment(oiqp.var_keys.size(), Int(0));
    PerPerm r;
    if (!oiqp.var_keys.empty()) {
      SolveOptions inner = opts;
      inner.workers = 1;
      const SolveResult sr = solve(oiqp.iqp, inner);
      QIQP_CHECK(sr.outcome.status == SolveStatus::Optimal, "ola subproblem must be solvable");
      assignment = sr.outcome.x;
      r.stats = sr.stats;
      const Rat val = sr.outcome.value / 2;  // solver objective is 2 * val(sigma, G)
      QIQP_CHECK(is_integer(val), "ola objective must be an even integer");
      r.arr = reconstruct_arrangement(g, partition, perms[p], assignment);
      QIQP_CHECK(arrangement_cost(g, r.arr) == numerator(val),
                 "reconstructed arrangement cost disagrees with the IQP objective");
      r.cost = numerator(val);
    } else {
      r.arr = reconstruct_arrangement(g, partition, perms[p], assignment);
      r.cost = arrangement_cost(g, r.arr);
    }
    results[p] = std::move(r);
  };

  const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(perms.size())));
  if (workers <= 1) {
    for (std::size_t p = 0; p < perms.size(); ++p) solve_one(p);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t p = t; p < perms.size(); p += workers) {
          try {
            solve_one(p);
          } catch (...) {
            errors[p] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  bool first = true;
  for (std::size_t p = 0; p < perms.size(); ++p) {
    best.stats.merge(results[p].stats);
    if (first || results[p].cost < best.cost) {
      best.cost = results[p].cost;
      best.arrangement = results[p].arr;
      first = false;
    }
  }
  return best;
}

}  // namespace qiqp
