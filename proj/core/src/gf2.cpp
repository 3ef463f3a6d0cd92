#include "segcode/gf2.hpp"

#include <algorithm>
#include <bit>

#include "segcode/errors.hpp"

namespace segcode {

namespace {

std::string length_mismatch(std::size_t a, std::size_t b) {
  return "vector lengths differ: " + std::to_string(a) + " vs " + std::to_string(b);
}

// Mask of the valid bits in the last word of a vector of length len.
GF2Vector::Word tail_mask(std::size_t len) {
  const std::size_t rem = len % GF2Vector::kWordBits;
  return rem == 0 ? ~GF2Vector::Word{0} : (GF2Vector::Word{1} << rem) - 1;
}

}  // namespace

GF2Vector::GF2Vector(std::size_t len) : len_(len) {
  if (len_ > kWordBits) heap_.assign(word_count(), 0);
}

GF2Vector GF2Vector::from_string(std::string_view bits) {
  GF2Vector v(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      v.set(k);
    } else if (bits[k] != '0') {
      throw LabelError("invalid bit character '" + std::string(1, bits[k]) + "'");
    }
  }
  return v;
}

GF2Vector GF2Vector::of(std::initializer_list<int> entries) {
  GF2Vector v(entries.size());
  std::size_t k = 0;
  for (int e : entries) {
    if (e != 0 && e != 1) throw LabelError("vector entries must be 0 or 1");
    v.set(k++, e == 1);
  }
  return v;
}

GF2Vector GF2Vector::from_word(std::size_t len, Word word) {
  if (len > kWordBits) throw DimensionError("from_word supports at most 64 coordinates");
  GF2Vector v(len);
  v.inline_ = len == 0 ? 0 : word & tail_mask(len);
  return v;
}

GF2Vector GF2Vector::unit(std::size_t len, std::size_t i) {
  GF2Vector v(len);
  v.set(i);
  return v;
}

void GF2Vector::check_index(std::size_t k) const {
  if (k >= len_) {
    throw DimensionError("coordinate " + std::to_string(k) + " out of range for length " +
                         std::to_string(len_));
  }
}

bool GF2Vector::get(std::size_t k) const {
  check_index(k);
  return (data()[k / kWordBits] >> (k % kWordBits)) & 1U;
}

void GF2Vector::set(std::size_t k, bool value) {
  check_index(k);
  const Word bit = Word{1} << (k % kWordBits);
  if (value) {
    data()[k / kWordBits] |= bit;
  } else {
    data()[k / kWordBits] &= ~bit;
  }
}

void GF2Vector::flip(std::size_t k) {
  check_index(k);
  data()[k / kWordBits] ^= Word{1} << (k % kWordBits);
}

bool GF2Vector::is_zero() const noexcept {
  return std::ranges::all_of(words(), [](Word w) { return w == 0; });
}

std::size_t GF2Vector::popcount() const noexcept {
  std::size_t total = 0;
  for (Word w : words()) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t GF2Vector::first_one() const noexcept {
  const auto ws = words();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (ws[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(ws[i]));
  }
  return len_;
}

std::optional<std::pair<std::size_t, std::size_t>> GF2Vector::segment() const noexcept {
  if (len_ <= kWordBits) {
    if (inline_ == 0) return std::nullopt;
    const auto first = static_cast<std::size_t>(std::countr_zero(inline_));
    const Word block = inline_ >> first;
    if ((block & (block + 1)) != 0) return std::nullopt;
    return std::pair{first, first + static_cast<std::size_t>(std::countr_one(block)) - 1};
  }
  const std::size_t first = first_one();
  if (first == len_) return std::nullopt;
  std::size_t last = first;
  while (last + 1 < len_ && get(last + 1)) ++last;
  for (std::size_t k = last + 1; k < len_; ++k) {
    if (get(k)) return std::nullopt;
  }
  return std::pair{first, last};
}

GF2Vector& GF2Vector::operator+=(const GF2Vector& other) {
  if (len_ != other.len_) throw DimensionError(length_mismatch(len_, other.len_));
  auto mine = words();
  auto theirs = other.words();
  for (std::size_t i = 0; i < mine.size(); ++i) mine[i] ^= theirs[i];
  return *this;
}

bool GF2Vector::dot(const GF2Vector& other) const {
  if (len_ != other.len_) throw DimensionError(length_mismatch(len_, other.len_));
  Word acc = 0;
  auto mine = words();
  auto theirs = other.words();
  for (std::size_t i = 0; i < mine.size(); ++i) acc ^= mine[i] & theirs[i];
  return (std::popcount(acc) & 1) != 0;
}

std::string GF2Vector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t k = 0; k < len_; ++k) {
    if (get(k)) s[k] = '1';
  }
  return s;
}

bool operator==(const GF2Vector& a, const GF2Vector& b) noexcept {
  return a.len_ == b.len_ && std::ranges::equal(a.words(), b.words());
}

std::strong_ordering operator<=>(const GF2Vector& a, const GF2Vector& b) noexcept {
  if (a.len_ != b.len_) return a.len_ <=> b.len_;
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const GF2Vector::Word diff = wa[i] ^ wb[i];
    if (diff == 0) continue;
    const GF2Vector::Word lowest = diff & (~diff + 1);
    return (wb[i] & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t GF2Vector::hash() const noexcept {
  std::size_t h = std::hash<std::size_t>{}(len_);
  for (Word w : words()) {
    h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

GF2Vector vec_add(const GF2Vector& a, const GF2Vector& b) { return a + b; }

// ---------------------------------------------------------------------------

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, GF2Vector(cols)) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

GF2Matrix GF2Matrix::from_rows(std::vector<GF2Vector> rows, std::size_t cols) {
  GF2Matrix m;
  m.cols_ = rows.empty() ? cols : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw DimensionError(length_mismatch(m.cols_, r.size()));
  }
  m.rows_ = std::move(rows);
  return m;
}

GF2Matrix GF2Matrix::from_columns(std::span<const GF2Vector> columns, std::size_t rows) {
  const std::size_t r = columns.empty() ? rows : columns.front().size();
  GF2Matrix m(r, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != r) throw DimensionError(length_mismatch(r, columns[c].size()));
    for (std::size_t i = 0; i < r; ++i) {
      if (columns[c].get(i)) m.rows_[i].set(c);
    }
  }
  return m;
}

GF2Matrix GF2Matrix::from_strings(std::span<const std::string> rows, std::size_t cols) {
  std::vector<GF2Vector> vs;
  vs.reserve(rows.size());
  for (const auto& r : rows) vs.push_back(GF2Vector::from_string(r));
  return from_rows(std::move(vs), cols);
}

GF2Vector GF2Matrix::column(std::size_t c) const {
  if (c >= cols_) throw DimensionError("column index " + std::to_string(c) + " out of range");
  GF2Vector v(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (rows_[i].get(c)) v.set(i);
  }
  return v;
}

std::vector<GF2Vector> GF2Matrix::columns() const {
  std::vector<GF2Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

GF2Matrix GF2Matrix::transpose() const { return from_rows(columns(), rows()); }

GF2Vector GF2Matrix::apply(const GF2Vector& v) const {
  if (v.size() != cols_) throw DimensionError(length_mismatch(cols_, v.size()));
  GF2Vector out(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (rows_[i].dot(v)) out.set(i);
  }
  return out;
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  GF2Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(i, k)) out.rows_[i] += b.rows_[k];
    }
  }
  return out;
}

std::string GF2Matrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

// ---------------------------------------------------------------------------

GF2Vector EchelonBasis::reduce(GF2Vector v) const {
  if (v.size() != dim_) throw DimensionError(length_mismatch(dim_, v.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.get(pivots_[i])) v += basis_[i];
  }
  return v;
}

bool EchelonBasis::insert(const GF2Vector& v) {
  GF2Vector r = reduce(v);
  const std::size_t pivot = r.first_one();
  if (pivot == r.size()) return false;
  basis_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank(std::span<const GF2Vector> vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis basis(vectors.front().size());
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

std::size_t rank(const GF2Matrix& m) { return rank(m.row_vectors()); }

bool is_independent(std::span<const GF2Vector> vectors) {
  if (vectors.empty()) return true;
  EchelonBasis basis(vectors.front().size());
  for (const auto& v : vectors) {
    if (!basis.insert(v)) return false;
  }
  return true;
}

bool span_contains(std::span<const GF2Vector> vectors, const GF2Vector& v) {
  EchelonBasis basis(v.size());
  for (const auto& s : vectors) basis.insert(s);
  return basis.contains(v);
}

bool is_basis(std::span<const GF2Vector> vectors, std::size_t dim) {
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionError(length_mismatch(dim, v.size()));
  }
  return vectors.size() == dim && is_independent(vectors);
}

bool is_nonsingular(const GF2Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::vector<GF2Vector> nullspace_of_columns(std::span<const GF2Vector> columns) {
  const std::size_t m = columns.size();
  if (m == 0) return {};
  const std::size_t dim = columns.front().size();
  // Each basis entry carries the combination of input columns it came from.
  std::vector<GF2Vector> basis;
  std::vector<GF2Vector> combos;
  std::vector<std::size_t> pivots;
  std::vector<GF2Vector> null;
  for (std::size_t j = 0; j < m; ++j) {
    if (columns[j].size() != dim) throw DimensionError(length_mismatch(dim, columns[j].size()));
    GF2Vector v = columns[j];
    GF2Vector combo = GF2Vector::unit(m, j);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (v.get(pivots[i])) {
        v += basis[i];
        combo += combos[i];
      }
    }
    const std::size_t pivot = v.first_one();
    if (pivot == dim) {
      null.push_back(std::move(combo));
    } else {
      basis.push_back(std::move(v));
      combos.push_back(std::move(combo));
      pivots.push_back(pivot);
    }
  }
  return null;
}

// ---------------------------------------------------------------------------

std::uint64_t count_nonsingular(std::size_t dim) {
  if (dim > 15) throw DimensionError("count_nonsingular overflows beyond dimension 15");
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < dim; ++k) total *= (std::uint64_t{1} << dim) - (std::uint64_t{1} << k);
  return total;
}

namespace detail {

void search_nonsingular_rows(
    std::size_t dim,
    const std::function<bool(std::span<const std::uint64_t>, std::size_t)>& accept_prefix,
    const std::function<bool(std::span<const std::uint64_t>)>& on_complete) {
  if (dim > 24) throw DimensionError("row search supports at most 24 dimensions");
  if (dim == 0) {
    on_complete({});
    return;
  }
  // Candidate rows in printed-string order: the counter's most significant bit
  // is coordinate 0.
  const std::uint64_t count = (std::uint64_t{1} << dim) - 1;
  std::vector<std::uint64_t> candidates(count);
  for (std::uint64_t x = 1; x <= count; ++x) {
    std::uint64_t word = 0;
    for (std::size_t k = 0; k < dim; ++k) {
      if ((x >> (dim - 1 - k)) & 1U) word |= std::uint64_t{1} << k;
    }
    candidates[x - 1] = word;
  }

  std::vector<std::uint64_t> rows(dim, 0);
  // reduced[i] is row i reduced against rows < i; its lowest set bit is a pivot
  // that no later reduced row contains.
  std::vector<std::uint64_t> reduced(dim, 0);
  bool stop = false;

  auto recurse = [&](auto&& self, std::size_t level) -> void {
    for (std::uint64_t cand : candidates) {
      std::uint64_t r = cand;
      for (std::size_t i = 0; i < level; ++i) {
        const std::uint64_t pivot = reduced[i] & (~reduced[i] + 1);
        if (r & pivot) r ^= reduced[i];
      }
      if (r == 0) continue;
      rows[level] = cand;
      reduced[level] = r;
      if (!accept_prefix(std::span<const std::uint64_t>(rows.data(), level + 1), level)) continue;
      if (level + 1 == dim) {
        if (!on_complete(rows)) {
          stop = true;
          return;
        }
      } else {
        self(self, level + 1);
        if (stop) return;
      }
    }
  };
  recurse(recurse, 0);
}

GF2Matrix matrix_from_row_words(std::size_t dim, std::span<const std::uint64_t> rows) {
  std::vector<GF2Vector> vs;
  vs.reserve(rows.size());
  for (std::uint64_t w : rows) vs.push_back(GF2Vector::from_word(dim, w));
  return GF2Matrix::from_rows(std::move(vs), dim);
}

}  // namespace detail

std::size_t enumerate_nonsingular(std::size_t dim, const MatrixVisitor& visitor, std::size_t cap) {
  if (dim > cap) throw CapExceededError("GL(" + std::to_string(dim) + ",2) enumeration", cap);
  std::size_t visited = 0;
  detail::search_nonsingular_rows(
      dim, [](std::span<const std::uint64_t>, std::size_t) { return true; },
      [&](std::span<const std::uint64_t> rows) {
        ++visited;
        return visitor(detail::matrix_from_row_words(dim, rows));
      });
  return visited;
}

}  // namespace segcode
