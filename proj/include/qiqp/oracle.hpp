#pragma once

#include "qiqp/graph.hpp"
#include "qiqp/model.hpp"

namespace qiqp {

// Independent brute-force ground truth. These deliberately re-implement
// feasibility and objective evaluation on their own so they can serve as
// cross-checks for everything else.

struct Box {
  IntVector lo, hi;  // componentwise, lo <= hi
};

// Exact minimum of the original-scale objective over the integer points of
// the box satisfying A x <= b (and C x = d when supplied). Ties broken by the
// lexicographically smallest vector. Never reports Unbounded.
SolveOutcome brute_force_iqp(const Iqp& iqp, const Box& box,
                             const IntMatrix* c = nullptr, const IntVector* d = nullptr);

// Exact optimal linear arrangement by enumerating all n! permutations
// (n <= 9); the lexicographically smallest optimal position vector wins.
std::pair<Arrangement, Int> brute_force_ola(const Graph& g);

}  // namespace qiqp
