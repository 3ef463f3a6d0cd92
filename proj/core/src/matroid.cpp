#include "segcode/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "segcode/errors.hpp"

namespace segcode {

SimpleBinaryMatroid::SimpleBinaryMatroid(GF2Matrix matrix, std::vector<std::string> labels)
    : matrix_(std::move(matrix)), columns_(matrix_.columns()), labels_(std::move(labels)) {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].is_zero()) throw ZeroColumnError(j);
  }
  std::unordered_map<GF2Vector, std::size_t> seen;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    auto [it, inserted] = seen.emplace(columns_[j], j);
    if (!inserted) throw DuplicateColumnError(it->second, j);
  }
  if (labels_.empty()) {
    for (std::size_t j = 0; j < columns_.size(); ++j) labels_.push_back(std::to_string(j));
  }
  if (labels_.size() != columns_.size()) {
    throw DimensionError("expected " + std::to_string(columns_.size()) + " column labels, got " +
                         std::to_string(labels_.size()));
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
    throw LabelError("column labels must be distinct");
  }
}

SegmentBinaryMatroid validate_segment(const GF2Matrix& matrix, std::vector<std::string> labels) {
  std::vector<EdgeCode> codes;
  codes.reserve(matrix.cols());
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    GF2Vector col = matrix.column(j);
    if (col.is_zero()) throw ZeroColumnError(j);
    if (!col.is_segment()) {
      throw NotSegmentError("column " + std::to_string(j) + " (" + col.to_string() +
                                ") is not consecutive-ones",
                            j);
    }
    codes.push_back(EdgeCode::from_bits(std::move(col)));
  }
  SimpleBinaryMatroid simple(matrix, std::move(labels));
  return SegmentBinaryMatroid(std::move(simple), std::move(codes));
}

SegmentBinaryMatroid SegmentBinaryMatroid::from_coding_sequence(const CodingSequence& s) {
  return validate_segment(GF2Matrix::from_columns(s.vectors(), static_cast<std::size_t>(s.n() - 1)));
}

CodingSequence SegmentBinaryMatroid::to_coding_sequence() const { return CodingSequence(n(), codes_); }

Graph SegmentBinaryMatroid::graph() const { return decode(to_coding_sequence()); }

bool independent(const SimpleBinaryMatroid& m, std::span<const std::size_t> subset) {
  std::vector<GF2Vector> selected;
  selected.reserve(subset.size());
  for (std::size_t j : subset) {
    if (j >= m.size()) {
      throw LabelError("column index " + std::to_string(j) + " out of range for " +
                       std::to_string(m.size()) + " columns");
    }
    selected.push_back(m.column(j));
  }
  if (selected.empty()) return true;
  return is_independent(selected);
}

// Every dependent set with zero sum is an element of the null space; the
// circuits are the nonzero elements whose support has nullity exactly one.
std::vector<std::vector<std::size_t>> circuits(const SimpleBinaryMatroid& m, std::size_t cap) {
  if (m.size() > cap) throw CapExceededError("circuit enumeration over " + std::to_string(m.size()) + " columns", cap);
  const auto null = nullspace_of_columns(m.columns());
  std::vector<std::vector<std::size_t>> out;
  if (null.empty()) return out;

  GF2Vector current(m.size());
  const std::size_t combos = std::size_t{1} << null.size();
  for (std::size_t step = 1; step < combos; ++step) {
    // Gray code: flip the basis vector at the lowest set bit of step.
    current += null[static_cast<std::size_t>(std::countr_zero(step))];
    std::vector<std::size_t> support;
    std::vector<GF2Vector> cols;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (current.get(j)) {
        support.push_back(j);
        cols.push_back(m.column(j));
      }
    }
    if (rank(cols) + 1 == cols.size()) out.push_back(std::move(support));
  }
  std::ranges::sort(out);
  return out;
}

bool exceeds_segment_bound(std::size_t rows, std::size_t m) { return m > (rows + 1) * rows / 2; }

// ---------------------------------------------------------------------------

namespace {

using Word = std::uint64_t;

std::vector<Word> column_words(const SimpleBinaryMatroid& m) {
  std::vector<Word> out;
  out.reserve(m.size());
  for (const auto& c : m.columns()) out.push_back(c.word0());
  return out;
}

// Coordinates 0..level of P * a, packed like a column word.
Word image_prefix(std::span<const Word> rows, std::size_t level, Word a) {
  Word out = 0;
  for (std::size_t i = 0; i <= level; ++i) {
    if (std::popcount(rows[i] & a) & 1) out |= Word{1} << i;
  }
  return out;
}

void check_gl_dim(std::size_t rows, std::size_t cap) {
  if (rows > cap) throw CapExceededError("GL(" + std::to_string(rows) + ",2) search", cap);
}

std::optional<std::vector<std::size_t>> match_columns(const GF2Matrix& p, const SimpleBinaryMatroid& a,
                                                      const SimpleBinaryMatroid& b) {
  std::unordered_map<GF2Vector, std::size_t> image_index;
  for (std::size_t j = 0; j < a.size(); ++j) image_index.emplace(p.apply(a.column(j)), j);
  std::vector<std::size_t> q(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    auto it = image_index.find(b.column(k));
    if (it == image_index.end()) return std::nullopt;
    q[k] = it->second;
  }
  return q;
}

}  // namespace

bool verify(const SimpleBinaryMatroid& a, const SimpleBinaryMatroid& b,
            const MatroidIsoCertificate& certificate) {
  if (a.rows() != b.rows() || a.size() != b.size()) return false;
  if (certificate.p.rows() != a.rows() || !is_nonsingular(certificate.p)) return false;
  if (certificate.q.size() != b.size()) return false;
  std::vector<char> used(a.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) {
    const std::size_t j = certificate.q[k];
    if (j >= a.size() || used[j]) return false;
    used[j] = 1;
    if (certificate.p.apply(a.column(j)) != b.column(k)) return false;
  }
  return true;
}

std::optional<MatroidIsoCertificate> matroid_isomorphic(const SimpleBinaryMatroid& a,
                                                        const SimpleBinaryMatroid& b,
                                                        std::size_t gl_cap) {
  if (a.rows() != b.rows() || a.size() != b.size()) {
    throw DimensionError("matroid shapes differ: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.size()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.size()));
  }
  const std::size_t r = a.rows();
  check_gl_dim(r, gl_cap);

  const GF2Matrix identity = GF2Matrix::identity(r);
  if (auto q = match_columns(identity, a, b)) return MatroidIsoCertificate{identity, std::move(*q)};

  const auto a_words = column_words(a);
  const auto b_words = column_words(b);
  // sorted_b_prefix[level]: B's columns cut to coordinates 0..level, sorted.
  std::vector<std::vector<Word>> sorted_b_prefix(r);
  for (std::size_t level = 0; level < r; ++level) {
    const Word mask = (level + 1 >= 64) ? ~Word{0} : (Word{1} << (level + 1)) - 1;
    for (Word w : b_words) sorted_b_prefix[level].push_back(w & mask);
    std::ranges::sort(sorted_b_prefix[level]);
  }

  std::optional<MatroidIsoCertificate> found;
  std::vector<Word> images(a_words.size());
  detail::search_nonsingular_rows(
      r,
      [&](std::span<const Word> rows, std::size_t level) {
        for (std::size_t j = 0; j < a_words.size(); ++j) images[j] = image_prefix(rows, level, a_words[j]);
        std::ranges::sort(images);
        return images == sorted_b_prefix[level];
      },
      [&](std::span<const Word> rows) {
        GF2Matrix p = detail::matrix_from_row_words(r, rows);
        auto q = match_columns(p, a, b);
        if (!q) throw InternalInvariantError("column multisets agree but matching failed");
        found = MatroidIsoCertificate{std::move(p), std::move(*q)};
        return false;
      });
  return found;
}

std::optional<GraphicRealization> is_simple_graphic(const SimpleBinaryMatroid& m, std::size_t gl_cap) {
  const std::size_t r = m.rows();
  if (exceeds_segment_bound(r, m.size())) return std::nullopt;
  check_gl_dim(r, gl_cap);

  auto realize = [&](GF2Matrix p) {
    SegmentBinaryMatroid segment = validate_segment(p * m.matrix(), m.labels());
    Graph g = segment.graph();
    return GraphicRealization{std::move(p), std::move(segment), std::move(g)};
  };

  const auto columns = m.columns();
  if (std::ranges::all_of(columns, [](const GF2Vector& c) { return c.is_segment(); })) {
    return realize(GF2Matrix::identity(r));
  }

  const auto words = column_words(m);
  std::optional<GraphicRealization> found;
  detail::search_nonsingular_rows(
      r,
      [&](std::span<const Word> rows, std::size_t level) {
        for (Word a : words) {
          const Word w = image_prefix(rows, level, a);
          if (w == 0) continue;
          const Word block = w >> std::countr_zero(w);
          if ((block & (block + 1)) != 0) return false;
        }
        return true;
      },
      [&](std::span<const Word> rows) {
        found = realize(detail::matrix_from_row_words(r, rows));
        return false;
      });
  return found;
}

bool operator_certificate(const SimpleBinaryMatroid& a, const SimpleBinaryMatroid& b,
                          const GF2Matrix& t) {
  if (a.rows() != b.rows() || a.size() != b.size()) throw DimensionError("matroid shapes differ");
  if (!t.is_square() || t.rows() != a.rows()) {
    throw DimensionError("operator must be " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.rows()));
  }
  if (!is_nonsingular(t)) return false;
  std::set<GF2Vector> targets(b.columns().begin(), b.columns().end());
  std::set<GF2Vector> images;
  for (const auto& c : a.columns()) {
    GF2Vector image = t.apply(c);
    if (!targets.contains(image)) return false;
    images.insert(std::move(image));
  }
  return images.size() == targets.size();
}

}  // namespace segcode
