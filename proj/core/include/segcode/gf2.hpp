#pragma once

// Dense linear algebra over the two-element field.
//
// Coordinates are indexed from the left starting at 0, so the vector printed
// as "001" has its single 1 at coordinate 2. Coordinate k lives in bit k % 64
// of word k / 64. Vectors of length <= 64 keep their single word inline.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace segcode {

class GF2Vector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  GF2Vector() = default;
  explicit GF2Vector(std::size_t len);

  /// Parses a string of '0'/'1' characters, leftmost character first.
  static GF2Vector from_string(std::string_view bits);
  /// Builds a vector from 0/1 entries, e.g. of({0, 0, 1}).
  static GF2Vector of(std::initializer_list<int> entries);
  /// Builds a vector of length len <= 64 from a packed word.
  static GF2Vector from_word(std::size_t len, Word word);
  /// The i-th unit vector of length len.
  static GF2Vector unit(std::size_t len, std::size_t i);

  std::size_t size() const noexcept { return len_; }
  std::size_t word_count() const noexcept { return (len_ + kWordBits - 1) / kWordBits; }

  bool get(std::size_t k) const;
  void set(std::size_t k, bool value = true);
  void flip(std::size_t k);

  bool is_zero() const noexcept;
  std::size_t popcount() const noexcept;
  /// Index of the leftmost 1, or size() for the zero vector.
  std::size_t first_one() const noexcept;

  /// The contiguous block [first, last] of 1-entries, if the vector is nonzero
  /// and has the consecutive-ones property.
  std::optional<std::pair<std::size_t, std::size_t>> segment() const noexcept;
  bool is_segment() const noexcept { return segment().has_value(); }

  /// Throws DimensionError on length mismatch.
  GF2Vector& operator+=(const GF2Vector& other);
  friend GF2Vector operator+(GF2Vector a, const GF2Vector& b) { return a += b; }

  /// Parity of the inner product.
  bool dot(const GF2Vector& other) const;

  std::span<const Word> words() const noexcept { return {data(), word_count()}; }
  std::span<Word> words() noexcept { return {data(), word_count()}; }
  /// The first storage word; the whole vector when size() <= 64.
  Word word0() const noexcept { return len_ <= kWordBits ? inline_ : heap_.front(); }

  std::string to_string() const;

  friend bool operator==(const GF2Vector& a, const GF2Vector& b) noexcept;
  /// Orders by length, then lexicographically from the left with 0 < 1 (the
  /// order of the printed strings).
  friend std::strong_ordering operator<=>(const GF2Vector& a, const GF2Vector& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  const Word* data() const noexcept { return len_ <= kWordBits ? &inline_ : heap_.data(); }
  Word* data() noexcept { return len_ <= kWordBits ? &inline_ : heap_.data(); }
  void check_index(std::size_t k) const;

  std::size_t len_ = 0;
  Word inline_ = 0;
  std::vector<Word> heap_;
};

/// Entrywise exclusive-or. Throws DimensionError on length mismatch.
GF2Vector vec_add(const GF2Vector& a, const GF2Vector& b);

class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  static GF2Matrix identity(std::size_t n);
  /// All rows must share one length. An empty row list gives a 0 x cols matrix.
  static GF2Matrix from_rows(std::vector<GF2Vector> rows, std::size_t cols = 0);
  static GF2Matrix from_columns(std::span<const GF2Vector> columns, std::size_t rows = 0);
  /// One string of '0'/'1' per row.
  static GF2Matrix from_strings(std::span<const std::string> rows, std::size_t cols = 0);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows() == cols(); }

  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_.at(r).set(c, value); }

  const GF2Vector& row(std::size_t r) const { return rows_.at(r); }
  std::span<const GF2Vector> row_vectors() const noexcept { return rows_; }
  GF2Vector column(std::size_t c) const;
  std::vector<GF2Vector> columns() const;

  GF2Matrix transpose() const;
  /// Matrix-vector product; v must have length cols().
  GF2Vector apply(const GF2Vector& v) const;

  friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
  friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) = default;

  /// Rows of '0'/'1' characters, one row per line, each terminated by '\n'.
  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<GF2Vector> rows_;
};

/// Incrementally maintained row-echelon basis of a subspace.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  /// Reduces v against the basis; the zero vector means v is in the span.
  GF2Vector reduce(GF2Vector v) const;
  bool contains(const GF2Vector& v) const { return reduce(v).is_zero(); }
  /// Adds v if it is independent of the current basis; returns whether it was.
  bool insert(const GF2Vector& v);

 private:
  std::size_t dim_;
  std::vector<GF2Vector> basis_;  // basis_[i] has its leftmost 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const GF2Matrix& m);
/// Rank of the given vectors. Throws DimensionError if lengths differ.
std::size_t rank(std::span<const GF2Vector> vectors);

/// True iff no nonempty subset sums to zero. The empty set is independent.
bool is_independent(std::span<const GF2Vector> vectors);
/// True iff v is a GF(2) combination of the vectors.
bool span_contains(std::span<const GF2Vector> vectors, const GF2Vector& v);
/// True iff the vectors number exactly dim and are independent. Vectors must
/// have length dim.
bool is_basis(std::span<const GF2Vector> vectors, std::size_t dim);
bool is_nonsingular(const GF2Matrix& m);

/// Basis of { x in GF(2)^m : sum_j x_j * columns[j] = 0 }, each of length m.
std::vector<GF2Vector> nullspace_of_columns(std::span<const GF2Vector> columns);

/// Returns true to continue enumeration, false to stop.
using MatrixVisitor = std::function<bool(const GF2Matrix&)>;

constexpr std::size_t kDefaultGLCap = 5;

/// Visits every invertible dim x dim matrix exactly once, ordered
/// lexicographically by rows (each row compared as its printed string).
/// Returns the number of matrices visited. Throws CapExceededError if dim > cap.
std::size_t enumerate_nonsingular(std::size_t dim, const MatrixVisitor& visitor,
                                  std::size_t cap = kDefaultGLCap);

/// prod_{k<dim} (2^dim - 2^k); dim <= 15.
std::uint64_t count_nonsingular(std::size_t dim);

namespace detail {

/// Row-by-row search over invertible dim x dim matrices whose rows are packed
/// words (coordinate k in bit k), in the same order as enumerate_nonsingular.
/// accept_prefix(rows, k) is called after row k is placed and may prune the
/// subtree; on_complete(rows) returns false to stop. dim <= 63.
void search_nonsingular_rows(
    std::size_t dim,
    const std::function<bool(std::span<const std::uint64_t>, std::size_t)>& accept_prefix,
    const std::function<bool(std::span<const std::uint64_t>)>& on_complete);

/// The rows as a GF2Matrix.
GF2Matrix matrix_from_row_words(std::size_t dim, std::span<const std::uint64_t> rows);

}  // namespace detail

}  // namespace segcode

template <>
struct std::hash<segcode::GF2Vector> {
  std::size_t operator()(const segcode::GF2Vector& v) const noexcept { return v.hash(); }
};
