#pragma once

#include "qiqp/numeric.hpp"

#include <vector>

namespace qiqp {

// Simple undirected graph on vertices {0..n-1}. Loops and duplicate edges are
// rejected at construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, std::vector<bool>(n, false)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  }

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    if (adj_[u][v]) throw std::invalid_argument("Graph: duplicate edge");
    adj_[u][v] = adj_[v][u] = true;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  bool has_edge(int u, int v) const { return adj_[u][v]; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (adj_[v][u]) out.push_back(u);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// Bijection vertex -> position in {1..n}.
struct Arrangement {
  std::vector<int> position;

  bool valid() const {
    std::vector<bool> seen(position.size(), false);
    for (int p : position) {
      if (p < 1 || p > static_cast<int>(position.size()) || seen[p - 1]) return false;
      seen[p - 1] = true;
    }
    return true;
  }
};

inline Int arrangement_cost(const Graph& g, const Arrangement& s) {
  Int c = 0;
  for (const auto& [u, v] : g.edges()) {
    int diff = s.position[u] - s.position[v];
    c += diff < 0 ? -diff : diff;
  }
  return c;
}

}  // namespace qiqp
