#pragma once

// Graphs as coding sequences.
//
// A vertex pair {hi, lo} with hi > lo on n vertices stands for the number
// 10^hi - 10^lo, whose decimal digits are hi - lo nines followed by lo zeros.
// Its edge code is the length n-1 vector with a 1 wherever that number, padded
// to n-1 digits, has a 9. The ones always form one contiguous block, and every
// such block comes from exactly one pair.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "segcode/gf2.hpp"
#include "segcode/graph.hpp"

namespace segcode {

/// Orders edge codes like the numbers 10^hi - 10^lo: hi ascending, then lo
/// descending.
struct SigmaKey {
  int hi = 0;
  int lo = 0;

  friend bool operator==(const SigmaKey&, const SigmaKey&) = default;
  friend std::strong_ordering operator<=>(const SigmaKey& a, const SigmaKey& b) {
    if (a.hi != b.hi) return a.hi <=> b.hi;
    return b.lo <=> a.lo;
  }
};

class EdgeCode {
 public:
  /// Throws LabelError unless 0 <= lo, hi < n and lo != hi. The pair is
  /// normalized so that hi > lo.
  static EdgeCode from_pair(int n, int hi, int lo);
  /// Throws NotSegmentError for a zero or non-consecutive vector.
  static EdgeCode from_bits(GF2Vector bits);

  const GF2Vector& bits() const noexcept { return bits_; }
  int n() const noexcept { return static_cast<int>(bits_.size()) + 1; }
  int hi() const noexcept { return hi_; }
  int lo() const noexcept { return lo_; }
  Edge edge() const noexcept { return {hi_, lo_}; }
  SigmaKey key() const noexcept { return {hi_, lo_}; }

  friend bool operator==(const EdgeCode& a, const EdgeCode& b) noexcept {
    return a.bits_ == b.bits_;
  }
  /// σ order (only meaningful between codes of equal length).
  friend std::strong_ordering operator<=>(const EdgeCode& a, const EdgeCode& b) noexcept {
    if (a.bits_.size() != b.bits_.size()) return a.bits_.size() <=> b.bits_.size();
    return a.key() <=> b.key();
  }

 private:
  EdgeCode(GF2Vector bits, int hi, int lo) : bits_(std::move(bits)), hi_(hi), lo_(lo) {}

  GF2Vector bits_;
  int hi_;
  int lo_;
};

/// Distinct edge codes of one length, kept in ascending σ order.
class CodingSequence {
 public:
  explicit CodingSequence(int n = 1);
  /// Sorts the codes. Throws DimensionError on a length other than n-1 and
  /// LabelError on duplicates.
  CodingSequence(int n, std::vector<EdgeCode> codes);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }
  std::span<const EdgeCode> codes() const noexcept { return codes_; }
  const EdgeCode& operator[](std::size_t i) const { return codes_.at(i); }

  std::vector<GF2Vector> vectors() const;
  std::vector<SigmaKey> keys() const;
  bool contains(const EdgeCode& e) const;

  friend bool operator==(const CodingSequence&, const CodingSequence&) = default;

 private:
  int n_;
  std::vector<EdgeCode> codes_;
};

SigmaKey sigma_key(const EdgeCode& e);

/// Throws LabelError unless 0 <= j < i < n (the order of i and j is free).
EdgeCode edge_to_code(int n, int i, int j);
/// The pair (hi, lo) of a consecutive-ones vector of length n-1. Throws
/// NotSegmentError otherwise.
std::pair<int, int> code_to_edge(const GF2Vector& bits);

/// Renames vertex v to labeling[v], then codes and σ-sorts the edges.
CodingSequence encode(const Graph& g, std::span<const int> labeling);
CodingSequence encode(const Graph& g);

/// The graph G(S) on all n vertices, isolated ones included.
Graph decode(const CodingSequence& s);

/// G̃(S): the decoded graph without isolated vertices. Remaining vertices keep
/// their relative order; original_labels[k] is the label of new vertex k.
struct StrippedGraph {
  Graph graph;
  std::vector<int> original_labels;
};
StrippedGraph decode_stripped(const CodingSequence& s);

/// C(n-1) in σ order. Throws LabelError for n < 2.
CodingSequence full_segment_set(int n);

/// Coding sequence of the complement graph.
CodingSequence complement_code(const CodingSequence& s);

/// If p and q share exactly one endpoint, their sum is the code of the pair of
/// remaining endpoints; otherwise the sum has no consecutive-ones form and the
/// result is empty. Throws DegenerateError if p == q.
std::optional<EdgeCode> sum_endpoints(const EdgeCode& p, const EdgeCode& q);

constexpr int kDefaultCanonCap = 10;

struct CanonicalForm {
  CodingSequence code;
  std::vector<int> labeling;  // vertex v receives label labeling[v]
};

/// The coding sequence with lexicographically smallest σ key sequence over all
/// labelings, together with a labeling that produces it. Among optimal
/// labelings the witness is the lexicographically smallest array. Throws
/// CapExceededError when g.n() > cap.
CanonicalForm canonical_code(const Graph& g, int cap = kDefaultCanonCap);

}  // namespace segcode
