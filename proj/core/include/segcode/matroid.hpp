#pragma once

// Column matroids over GF(2).
//
// A simple binary matroid is given by a matrix with nonzero, pairwise distinct
// columns; a set of column indices is independent when those columns are.
// When every column also has the consecutive-ones property the matroid is a
// segment matroid: its columns are edge codes on n = rows + 1 vertices, and
// its circuits are the cycles of the graph they encode.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segcode/coding.hpp"
#include "segcode/gf2.hpp"
#include "segcode/graph.hpp"

namespace segcode {

class SimpleBinaryMatroid {
 public:
  /// Throws ZeroColumnError or DuplicateColumnError. Labels default to the
  /// column indices and must be distinct.
  explicit SimpleBinaryMatroid(GF2Matrix matrix, std::vector<std::string> labels = {});

  const GF2Matrix& matrix() const noexcept { return matrix_; }
  std::size_t rows() const noexcept { return matrix_.rows(); }
  std::size_t size() const noexcept { return columns_.size(); }
  std::span<const GF2Vector> columns() const noexcept { return columns_; }
  const GF2Vector& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  GF2Matrix matrix_;
  std::vector<GF2Vector> columns_;
  std::vector<std::string> labels_;
};

class SegmentBinaryMatroid {
 public:
  /// Columns in σ order of the sequence.
  static SegmentBinaryMatroid from_coding_sequence(const CodingSequence& s);

  const SimpleBinaryMatroid& simple() const noexcept { return simple_; }
  const GF2Matrix& matrix() const noexcept { return simple_.matrix(); }
  std::size_t size() const noexcept { return simple_.size(); }
  /// Vertex count of the encoded graph, rows + 1.
  int n() const noexcept { return static_cast<int>(simple_.rows()) + 1; }
  const EdgeCode& code(std::size_t j) const { return codes_.at(j); }

  CodingSequence to_coding_sequence() const;
  /// The graph G(S) of the columns.
  Graph graph() const;

  operator const SimpleBinaryMatroid&() const noexcept { return simple_; }  // NOLINT

 private:
  friend SegmentBinaryMatroid validate_segment(const GF2Matrix& matrix,
                                               std::vector<std::string> labels);
  SegmentBinaryMatroid(SimpleBinaryMatroid simple, std::vector<EdgeCode> codes)
      : simple_(std::move(simple)), codes_(std::move(codes)) {}

  SimpleBinaryMatroid simple_;
  std::vector<EdgeCode> codes_;  // codes_[j] is column j, in input order
};

/// Accepts a matrix whose columns are nonzero, distinct and consecutive-ones.
/// Columns are checked in index order for zero (ZeroColumnError) and segment
/// shape (NotSegmentError); duplicates raise DuplicateColumnError.
SegmentBinaryMatroid validate_segment(const GF2Matrix& matrix, std::vector<std::string> labels = {});

/// Throws LabelError for an index out of range.
bool independent(const SimpleBinaryMatroid& m, std::span<const std::size_t> subset);

constexpr std::size_t kDefaultCircuitCap = 20;

/// All minimal dependent column sets, each ascending, listed in lexicographic
/// order. Throws CapExceededError when m.size() > cap.
std::vector<std::vector<std::size_t>> circuits(const SimpleBinaryMatroid& m,
                                               std::size_t cap = kDefaultCircuitCap);

/// P * A * Q = B with P nonsingular and Q the permutation matrix of q:
/// column k of B equals column q[k] of P * A.
struct MatroidIsoCertificate {
  GF2Matrix p;
  std::vector<std::size_t> q;
};

bool verify(const SimpleBinaryMatroid& a, const SimpleBinaryMatroid& b,
            const MatroidIsoCertificate& certificate);

/// Searches nonsingular P in row-lexicographic order for one carrying the
/// columns of A onto those of B; the first hit is returned. Throws
/// DimensionError unless the shapes agree and CapExceededError when the row
/// count exceeds gl_cap.
std::optional<MatroidIsoCertificate> matroid_isomorphic(const SimpleBinaryMatroid& a,
                                                        const SimpleBinaryMatroid& b,
                                                        std::size_t gl_cap = kDefaultGLCap);

/// Whether m columns cannot all be distinct segments of length rows:
/// m > (rows + 1) * rows / 2.
bool exceeds_segment_bound(std::size_t rows, std::size_t m);

struct GraphicRealization {
  GF2Matrix p;  // P * A is the segment matrix
  SegmentBinaryMatroid segment;
  Graph graph;
};

/// A graph whose cycle matroid is isomorphic to m, found as the first
/// nonsingular P (row-lexicographic) with P * A consecutive-ones. Empty if m
/// has too many columns or no P works. Throws CapExceededError when the row
/// count exceeds gl_cap.
std::optional<GraphicRealization> is_simple_graphic(const SimpleBinaryMatroid& m,
                                                    std::size_t gl_cap = kDefaultGLCap);

/// T is nonsingular and maps the column set of A bijectively onto that of B.
/// Throws DimensionError on shape mismatch.
bool operator_certificate(const SimpleBinaryMatroid& a, const SimpleBinaryMatroid& b,
                          const GF2Matrix& t);

}  // namespace segcode
