#pragma once

#include "qiqp/graph.hpp"
#include "qiqp/solver.hpp"

#include <cstdint>

namespace qiqp {

// Optimal Linear Arrangement parameterized by vertex cover: partition the
// independent set into neighborhood types, try every cover permutation, and
// solve one bounded IQP over per-(type, gap) counters for each.

// Lexicographically smallest minimum vertex cover of size <= k_max, found by
// branching on an endpoint of an uncovered edge; nullopt when none exists.
std::optional<std::vector<int>> min_vertex_cover(const Graph& g, int k_max);

// Independent-set vertices grouped by their neighborhood inside the cover.
// Masks are over indices into the sorted cover; mask 0 collects vertices with
// no neighbors at all.
struct TypePartition {
  std::vector<int> cover;                  // sorted vertex ids
  std::vector<std::uint64_t> type_masks;   // ascending, one per nonempty type
  std::vector<std::vector<int>> members;   // aligned with type_masks, sorted ids
};
TypePartition partition_types(const Graph& g, const std::vector<int>& cover);

// Force of a type-S vertex sitting in the given gap: neighbors to the right
// minus neighbors to the left. S is a mask over cover positions 1..k.
int force(std::uint64_t s, int gap, int k);

// Cover vertices an edge from gap i to cover position j flies over.
int f_count(int i, int j, int k);

// 1 iff type-S vertices are adjacent to the cover vertex at position j and
// the (i2, S2) block lies strictly between the (i, S) block and that vertex in
// the super-homogeneous layout (intra-gap blocks ordered by force, then mask).
int g_indicator(int i, int j, std::uint64_t s, int i2, std::uint64_t s2, int k);

// The IQP over variables x[S][i] (type-major, gap-minor) for one cover
// permutation, with every objective coefficient doubled to an integer. The
// reported objective of the instance equals 2 * val(sigma, G).
struct OlaIqp {
  Iqp iqp;
  int k = 0;
  std::vector<std::uint64_t> type_masks;          // permuted-position masks, ascending
  std::vector<std::vector<int>> type_members;     // aligned, sorted vertex ids
  std::vector<std::pair<std::uint64_t, int>> var_keys;  // (mask, gap) per variable
};
OlaIqp build_ola_iqp(const Graph& g, const TypePartition& partition,
                     const std::vector<int>& perm);

// Layout a super-homogeneous arrangement from gap counts: gap blocks ordered
// by (force, mask), vertices inside a block by ascending id, neighborless
// vertices appended after gap k.
Arrangement reconstruct_arrangement(const Graph& g, const TypePartition& partition,
                                    const std::vector<int>& perm, const IntVector& assignment);

struct OlaResult {
  Arrangement arrangement;
  Int cost;
  std::vector<int> cover;
  SearchStats stats;
};

// nullopt iff no vertex cover of size <= k_max exists. The reconstructed
// arrangement's cost is verified against the halved IQP objective.
std::optional<OlaResult> solve_ola(const Graph& g, int k_max, const SolveOptions& opts = {});

}  // namespace qiqp
