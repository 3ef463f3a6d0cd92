#include "segcode/graph.hpp"

#include <algorithm>
#include <string>

#include "segcode/errors.hpp"

namespace segcode {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw LabelError("vertex count must be nonnegative");
  adjacency_.resize(static_cast<std::size_t>(n));
  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw LabelError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw LabelError("loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw LabelError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  const Edge e{std::max(u, v), std::min(u, v)};
  edges_.insert(std::ranges::upper_bound(edges_, e), e);
  adjacency_[static_cast<std::size_t>(u)].push_back(v);
  adjacency_[static_cast<std::size_t>(v)].push_back(u);
  std::ranges::sort(adjacency_[static_cast<std::size_t>(u)]);
  std::ranges::sort(adjacency_[static_cast<std::size_t>(v)]);
  const auto un = static_cast<std::size_t>(u);
  const auto vn = static_cast<std::size_t>(v);
  const auto nn = static_cast<std::size_t>(n_);
  matrix_[un * nn + vn] = 1;
  matrix_[vn * nn + un] = 1;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(v)] != 0;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
}

void check_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) {
    throw LabelError("permutation has " + std::to_string(perm.size()) + " entries, expected " +
                     std::to_string(n));
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
      throw LabelError("not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  check_permutation(perm, g.n());
  Graph out(g.n());
  for (const Edge& e : g.edges()) {
    out.add_edge(perm[static_cast<std::size_t>(e.hi)], perm[static_cast<std::size_t>(e.lo)]);
  }
  return out;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.n()) {
    signature_a_ = signatures(a);
    signature_b_ = signatures(b);
    image_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::optional<std::vector<int>> run() {
    if (a_.edge_count() != b_.edge_count()) return std::nullopt;
    auto sa = signature_a_;
    auto sb = signature_b_;
    std::ranges::sort(sa);
    std::ranges::sort(sb);
    if (sa != sb) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  // Degree followed by the sorted degrees of the neighbors.
  static std::vector<std::vector<int>> signatures(const Graph& g) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
      auto& sig = out[static_cast<std::size_t>(v)];
      sig.push_back(g.degree(v));
      std::vector<int> nbr;
      for (int u : g.neighbors(v)) nbr.push_back(g.degree(u));
      std::ranges::sort(nbr);
      sig.insert(sig.end(), nbr.begin(), nbr.end());
    }
    return out;
  }

  bool extend(int u) {
    if (u == n_) return true;
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      if (signature_a_[static_cast<std::size_t>(u)] != signature_b_[static_cast<std::size_t>(v)]) continue;
      bool consistent = true;
      for (int w = 0; w < u && consistent; ++w) {
        consistent = a_.has_edge(u, w) == b_.has_edge(v, image_[static_cast<std::size_t>(w)]);
      }
      if (!consistent) continue;
      image_[static_cast<std::size_t>(u)] = v;
      used_[static_cast<std::size_t>(v)] = 1;
      if (extend(u + 1)) return true;
      used_[static_cast<std::size_t>(v)] = 0;
      image_[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  std::vector<std::vector<int>> signature_a_;
  std::vector<std::vector<int>> signature_b_;
  std::vector<int> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> first_isomorphism(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) return std::nullopt;
  return IsoSearch(a, b).run();
}

}  // namespace segcode
