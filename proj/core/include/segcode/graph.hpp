#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace segcode {

/// Unordered vertex pair stored with hi > lo.
struct Edge {
  int hi = 0;
  int lo = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws LabelError on loops, repeated edges or out-of-range labels.
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edges sorted ascending by (hi, lo).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<char> matrix_;  // n_ * n_ adjacency flags
};

/// Checks that perm is a bijection on 0..n-1; throws LabelError otherwise.
void check_permutation(std::span<const int> perm, int n);

/// The graph with every vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// The lexicographically first perm with relabel(a, perm) == b, found by
/// backtracking over vertices 0, 1, ... with degree-signature filtering.
std::optional<std::vector<int>> first_isomorphism(const Graph& a, const Graph& b);

}  // namespace segcode
