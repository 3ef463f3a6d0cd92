#include "segcode/coding.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "segcode/errors.hpp"

namespace segcode {

EdgeCode EdgeCode::from_pair(int n, int hi, int lo) {
  if (hi < lo) std::swap(hi, lo);
  if (lo < 0 || hi >= n || hi == lo) {
    throw LabelError("invalid vertex pair (" + std::to_string(hi) + "," + std::to_string(lo) +
                     ") for n = " + std::to_string(n));
  }
  // Ones at left positions n-hi .. n-lo-1 (1-based), i.e. n-hi-1 .. n-lo-2.
  GF2Vector bits(static_cast<std::size_t>(n - 1));
  for (int k = n - hi - 1; k <= n - lo - 2; ++k) bits.set(static_cast<std::size_t>(k));
  return EdgeCode(std::move(bits), hi, lo);
}

EdgeCode EdgeCode::from_bits(GF2Vector bits) {
  const auto block = bits.segment();
  if (!block) throw NotSegmentError("vector " + bits.to_string() + " is not a segment");
  const int n = static_cast<int>(bits.size()) + 1;
  const int hi = n - 1 - static_cast<int>(block->first);
  const int lo = n - 2 - static_cast<int>(block->second);
  return EdgeCode(std::move(bits), hi, lo);
}

SigmaKey sigma_key(const EdgeCode& e) { return e.key(); }

EdgeCode edge_to_code(int n, int i, int j) { return EdgeCode::from_pair(n, i, j); }

std::pair<int, int> code_to_edge(const GF2Vector& bits) {
  const EdgeCode e = EdgeCode::from_bits(bits);
  return {e.hi(), e.lo()};
}

// ---------------------------------------------------------------------------

CodingSequence::CodingSequence(int n) : n_(n) {
  if (n < 1) throw LabelError("a coding sequence needs n >= 1");
}

CodingSequence::CodingSequence(int n, std::vector<EdgeCode> codes)
    : CodingSequence(n) {
  for (const auto& c : codes) {
    if (c.n() != n) {
      throw DimensionError("code " + c.bits().to_string() + " has length " +
                           std::to_string(c.bits().size()) + ", expected " +
                           std::to_string(n - 1));
    }
  }
  std::ranges::sort(codes);
  if (auto dup = std::ranges::adjacent_find(codes); dup != codes.end()) {
    throw LabelError("repeated code " + dup->bits().to_string());
  }
  codes_ = std::move(codes);
}

std::vector<GF2Vector> CodingSequence::vectors() const {
  std::vector<GF2Vector> out;
  out.reserve(codes_.size());
  for (const auto& c : codes_) out.push_back(c.bits());
  return out;
}

std::vector<SigmaKey> CodingSequence::keys() const {
  std::vector<SigmaKey> out;
  out.reserve(codes_.size());
  for (const auto& c : codes_) out.push_back(c.key());
  return out;
}

bool CodingSequence::contains(const EdgeCode& e) const {
  return e.n() == n_ && std::ranges::binary_search(codes_, e);
}

CodingSequence encode(const Graph& g, std::span<const int> labeling) {
  check_permutation(labeling, g.n());
  const int n = std::max(g.n(), 1);
  std::vector<EdgeCode> codes;
  codes.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    codes.push_back(EdgeCode::from_pair(n, labeling[static_cast<std::size_t>(e.hi)],
                                        labeling[static_cast<std::size_t>(e.lo)]));
  }
  return CodingSequence(n, std::move(codes));
}

CodingSequence encode(const Graph& g) {
  std::vector<int> identity(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) identity[static_cast<std::size_t>(v)] = v;
  return encode(g, identity);
}

Graph decode(const CodingSequence& s) {
  Graph g(s.n());
  for (const auto& c : s.codes()) g.add_edge(c.hi(), c.lo());
  return g;
}

StrippedGraph decode_stripped(const CodingSequence& s) {
  std::vector<char> used(static_cast<std::size_t>(s.n()), 0);
  for (const auto& c : s.codes()) {
    used[static_cast<std::size_t>(c.hi())] = 1;
    used[static_cast<std::size_t>(c.lo())] = 1;
  }
  StrippedGraph out;
  std::vector<int> new_label(static_cast<std::size_t>(s.n()), -1);
  for (int v = 0; v < s.n(); ++v) {
    if (used[static_cast<std::size_t>(v)]) {
      new_label[static_cast<std::size_t>(v)] = static_cast<int>(out.original_labels.size());
      out.original_labels.push_back(v);
    }
  }
  out.graph = Graph(static_cast<int>(out.original_labels.size()));
  for (const auto& c : s.codes()) {
    out.graph.add_edge(new_label[static_cast<std::size_t>(c.hi())],
                       new_label[static_cast<std::size_t>(c.lo())]);
  }
  return out;
}

CodingSequence full_segment_set(int n) {
  if (n < 2) throw LabelError("C(n-1) needs n >= 2, got " + std::to_string(n));
  std::vector<EdgeCode> codes;
  codes.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int hi = 1; hi < n; ++hi) {
    for (int lo = 0; lo < hi; ++lo) codes.push_back(EdgeCode::from_pair(n, hi, lo));
  }
  return CodingSequence(n, std::move(codes));
}

CodingSequence complement_code(const CodingSequence& s) {
  if (s.n() < 2) return CodingSequence(s.n());
  std::vector<EdgeCode> codes;
  const CodingSequence all = full_segment_set(s.n());
  for (const auto& c : all.codes()) {
    if (!s.contains(c)) codes.push_back(c);
  }
  return CodingSequence(s.n(), std::move(codes));
}

std::optional<EdgeCode> sum_endpoints(const EdgeCode& p, const EdgeCode& q) {
  if (p.n() != q.n()) throw DimensionError("codes of different lengths");
  if (p == q) throw DegenerateError("sum_endpoints needs two distinct codes");
  GF2Vector sum = p.bits() + q.bits();
  if (!sum.is_segment()) return std::nullopt;
  return EdgeCode::from_bits(std::move(sum));
}

// ---------------------------------------------------------------------------
//
// Comparing two σ sequences of equal length reduces to comparing, label by
// label, which earlier labels the newly labeled vertex is adjacent to. Write
// that set for label k as a mask with label k-1 as the most significant bit;
// a larger mask means a smaller σ sequence, and the first label where two
// labelings differ decides. The search therefore hands out labels 0, 1, 2, ...
// keeping only vertices with the largest mask at each step.

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(static_cast<std::size_t>(g.n())) {
    label_of_.assign(n_, -1);
    order_.assign(n_, -1);
    masks_.assign(n_, 0);
    twins_.assign(n_ * n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t w = v + 1; w < n_; ++w) {
        twins_[v * n_ + w] = twins_[w * n_ + v] = are_twins(static_cast<int>(v), static_cast<int>(w));
      }
    }
  }

  std::vector<int> run() {
    if (n_ > 0) descend(0, true);
    std::vector<int> labeling(n_);
    for (std::size_t k = 0; k < n_; ++k) labeling[static_cast<std::size_t>(best_order_[k])] = static_cast<int>(k);
    return labeling;
  }

 private:
  // v and w have the same neighbors apart from each other, so swapping them
  // is an automorphism.
  bool are_twins(int v, int w) const {
    for (int u = 0; u < g_.n(); ++u) {
      if (u == v || u == w) continue;
      if (g_.has_edge(u, v) != g_.has_edge(u, w)) return false;
    }
    return true;
  }

  std::uint64_t mask_for(int v) const {
    std::uint64_t mask = 0;
    for (int u : g_.neighbors(v)) {
      const int l = label_of_[static_cast<std::size_t>(u)];
      if (l >= 0) mask |= std::uint64_t{1} << l;
    }
    return mask;
  }

  // tied: the masks for labels < level equal those of the best labeling.
  void descend(std::size_t level, bool tied) {
    std::uint64_t top = 0;
    std::vector<int> candidates;
    for (std::size_t v = 0; v < n_; ++v) {
      if (label_of_[v] >= 0) continue;
      const std::uint64_t m = mask_for(static_cast<int>(v));
      if (candidates.empty() || m > top) {
        top = m;
        candidates.assign(1, static_cast<int>(v));
      } else if (m == top) {
        candidates.push_back(static_cast<int>(v));
      }
    }
    bool still_tied = tied && have_best_;
    if (still_tied) {
      if (top < best_masks_[level]) return;
      if (top > best_masks_[level]) still_tied = false;
    }
    masks_[level] = top;
    std::vector<int> explored;
    for (int v : candidates) {
      const bool redundant = std::ranges::any_of(explored, [&](int u) {
        return twins_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] != 0;
      });
      if (redundant) continue;
      explored.push_back(v);
      label_of_[static_cast<std::size_t>(v)] = static_cast<int>(level);
      order_[level] = v;
      if (level + 1 == n_) {
        if (!have_best_ || !still_tied) {
          best_masks_ = masks_;
          best_order_ = order_;
          have_best_ = true;
        }
      } else {
        descend(level + 1, still_tied);
      }
      label_of_[static_cast<std::size_t>(v)] = -1;
      order_[level] = -1;
      // A better labeling found below v changes the bound for the siblings.
      if (have_best_ && !still_tied && best_masks_[level] == top) still_tied = prefix_equals_best(level);
    }
  }

  bool prefix_equals_best(std::size_t level) const {
    for (std::size_t k = 0; k <= level; ++k) {
      if (masks_[k] != best_masks_[k]) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<int> label_of_;
  std::vector<int> order_;
  std::vector<std::uint64_t> masks_;
  std::vector<char> twins_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_masks_;
  std::vector<int> best_order_;
};

}  // namespace

CanonicalForm canonical_code(const Graph& g, int cap) {
  if (g.n() < 1) throw LabelError("canonical_code needs n >= 1");
  if (g.n() > cap) {
    throw CapExceededError("canonical code of a graph with " + std::to_string(g.n()) + " vertices",
                           static_cast<std::size_t>(cap));
  }
  if (g.n() > 64) throw CapExceededError("canonical code supports at most 64 vertices", 64);
  CodingSequence code = encode(g, CanonicalSearch(g).run());
  // Every optimal labeling is an isomorphism onto the decoded canonical graph;
  // report the smallest one as an array.
  auto first = first_isomorphism(g, decode(code));
  if (!first) throw InternalInvariantError("canonical graph is not isomorphic to its input");
  std::vector<int> labeling = std::move(*first);
  return {std::move(code), std::move(labeling)};
}

}  // namespace segcode
