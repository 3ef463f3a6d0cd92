#pragma once

// Strong isomorphism of segment matroids and its correspondence with graph
// isomorphism.
//
// A strong isomorphism is a nonsingular linear operator T on GF(2)^(n-1) that
// permutes the segment set C(n-1) and carries one coding sequence onto the
// other. Such operators are exactly the ones induced by vertex permutations,
// so two graphs are isomorphic iff their coding sequences are strongly
// isomorphic.

#include <optional>
#include <span>
#include <vector>

#include "segcode/coding.hpp"
#include "segcode/gf2.hpp"
#include "segcode/graph.hpp"

namespace segcode {

class VertexPermutation {
 public:
  /// Throws LabelError unless images is a permutation of 0..size-1.
  explicit VertexPermutation(std::vector<int> images);
  static VertexPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_.at(static_cast<std::size_t>(v)); }
  std::span<const int> images() const noexcept { return images_; }

  VertexPermutation inverse() const;
  /// (this * other)(v) = this(other(v)).
  VertexPermutation operator*(const VertexPermutation& other) const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<int> images_;
};

class LinearOperatorGF2 {
 public:
  /// Throws DimensionError unless square and NotStrongOperatorError if singular.
  explicit LinearOperatorGF2(GF2Matrix matrix);

  const GF2Matrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  GF2Vector operator()(const GF2Vector& v) const { return matrix_.apply(v); }

  friend bool operator==(const LinearOperatorGF2&, const LinearOperatorGF2&) = default;

 private:
  GF2Matrix matrix_;
};

/// T(code{i, j}) = code{g(i), g(j)}. Determined by its values on the unit
/// codes u_i = code{i, i-1}, i = 1..n-1.
LinearOperatorGF2 operator_from_permutation(int n, const VertexPermutation& g);

/// Whether the matrix is nonsingular and maps C(n-1) onto itself.
bool preserves_segment_set(int n, const GF2Matrix& t);

/// Recovers the vertex permutation behind an operator that permutes C(n-1):
/// g(i) is the common endpoint of T(u_i) and T(u_{i+1}). Inverse of
/// operator_from_permutation for n >= 3 (for n <= 2 the identity is returned).
/// Throws NotStrongOperatorError if T does not permute C(n-1).
VertexPermutation permutation_from_operator(int n, const LinearOperatorGF2& t);

/// T permutes C(n-1) and maps the codes of a bijectively onto those of b.
/// Throws DimensionError on differing n or operator size.
bool is_strong_certificate(const CodingSequence& a, const CodingSequence& b, const LinearOperatorGF2& t);

struct GraphIsoWitness {
  VertexPermutation g;  // relabel(a, g) == b
  LinearOperatorGF2 t;  // strong certificate for encode(a), encode(b)
};

/// The lexicographically first vertex permutation g with relabel(a, g) == b,
/// and its operator. Throws DimensionError when vertex counts differ.
std::optional<GraphIsoWitness> graphs_isomorphic(const Graph& a, const Graph& b);

/// Strong isomorphism of two coding sequences with equal n and size. Throws
/// DimensionError otherwise.
std::optional<LinearOperatorGF2> strong_isomorphic(const CodingSequence& a, const CodingSequence& b);

}  // namespace segcode
