#include "segcode/strong_iso.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "segcode/errors.hpp"

namespace segcode {

VertexPermutation::VertexPermutation(std::vector<int> images) : images_(std::move(images)) {
  check_permutation(images_, static_cast<int>(images_.size()));
}

VertexPermutation VertexPermutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) images[static_cast<std::size_t>(v)] = v;
  return VertexPermutation(std::move(images));
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) inv[static_cast<std::size_t>(images_[v])] = static_cast<int>(v);
  return VertexPermutation(std::move(inv));
}

VertexPermutation VertexPermutation::operator*(const VertexPermutation& other) const {
  if (size() != other.size()) throw DimensionError("cannot compose permutations of different sizes");
  std::vector<int> out(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) out[v] = (*this)(other(static_cast<int>(v)));
  return VertexPermutation(std::move(out));
}

LinearOperatorGF2::LinearOperatorGF2(GF2Matrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw DimensionError("a linear operator needs a square matrix");
  if (!is_nonsingular(matrix_)) throw NotStrongOperatorError("operator matrix is singular");
}

namespace {

// u_i = code{i, i-1} has its single 1 at coordinate n-1-i.
GF2Vector unit_code(int n, int i) {
  return GF2Vector::unit(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1 - i));
}

}  // namespace

LinearOperatorGF2 operator_from_permutation(int n, const VertexPermutation& g) {
  if (g.size() != n) {
    throw DimensionError("permutation of size " + std::to_string(g.size()) + " for n = " +
                         std::to_string(n));
  }
  if (n <= 1) return LinearOperatorGF2(GF2Matrix(0, 0));
  std::vector<GF2Vector> columns;
  columns.reserve(static_cast<std::size_t>(n - 1));
  for (int c = 0; c < n - 1; ++c) {
    const int i = n - 1 - c;  // coordinate c is the unit code u_i
    columns.push_back(EdgeCode::from_pair(n, g(i), g(i - 1)).bits());
  }
  return LinearOperatorGF2(GF2Matrix::from_columns(columns));
}

bool preserves_segment_set(int n, const GF2Matrix& t) {
  if (n < 1 || !t.is_square() || t.rows() != static_cast<std::size_t>(n - 1)) return false;
  if (!is_nonsingular(t)) return false;
  if (n == 1) return true;
  // An injective map sending the finite set C(n-1) into itself is onto.
  const CodingSequence all = full_segment_set(n);
  for (const auto& c : all.codes()) {
    if (!t.apply(c.bits()).is_segment()) return false;
  }
  return true;
}

VertexPermutation permutation_from_operator(int n, const LinearOperatorGF2& t) {
  if (n < 1 || t.dim() != static_cast<std::size_t>(n - 1)) {
    throw DimensionError("operator of dimension " + std::to_string(t.dim()) + " for n = " +
                         std::to_string(n));
  }
  if (!preserves_segment_set(n, t.matrix())) {
    throw NotStrongOperatorError("operator does not permute the segment set C(n-1)");
  }
  if (n <= 2) return VertexPermutation::identity(n);

  // images[i] = endpoints of T(u_i), i = 1..n-1.
  std::vector<std::pair<int, int>> images(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) images[static_cast<std::size_t>(i)] = code_to_edge(t(unit_code(n, i)));

  std::vector<int> g(static_cast<std::size_t>(n), -1);
  for (int i = 1; i + 1 < n; ++i) {
    const auto [a, b] = images[static_cast<std::size_t>(i)];
    const auto [c, d] = images[static_cast<std::size_t>(i + 1)];
    const int shared = (a == c || a == d ? 1 : 0) + (b == c || b == d ? 1 : 0);
    if (shared != 1) {
      throw InternalInvariantError("images of consecutive unit codes share " +
                                   std::to_string(shared) + " endpoints");
    }
    g[static_cast<std::size_t>(i)] = (a == c || a == d) ? a : b;
  }
  const auto [first_a, first_b] = images[1];
  g[0] = first_a == g[1] ? first_b : first_a;

  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int i = 0; i + 1 < n; ++i) {
    if (used[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])]) {
      throw InternalInvariantError("recovered vertex map is not injective");
    }
    used[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] = 1;
  }
  const auto unused = std::ranges::find(used, 0);
  g[static_cast<std::size_t>(n - 1)] = static_cast<int>(unused - used.begin());

  const auto [last_a, last_b] = images[static_cast<std::size_t>(n - 1)];
  const int expected_last = last_a == g[static_cast<std::size_t>(n - 2)] ? last_b : last_a;
  if (expected_last != g[static_cast<std::size_t>(n - 1)]) {
    throw InternalInvariantError("unused label disagrees with the image of the last unit code");
  }
  return VertexPermutation(std::move(g));
}

bool is_strong_certificate(const CodingSequence& a, const CodingSequence& b, const LinearOperatorGF2& t) {
  if (a.n() != b.n()) throw DimensionError("coding sequences have different n");
  if (t.dim() != static_cast<std::size_t>(a.n() - 1)) {
    throw DimensionError("operator dimension does not match n - 1");
  }
  if (a.size() != b.size()) return false;
  if (!preserves_segment_set(a.n(), t.matrix())) return false;
  std::set<GF2Vector> targets;
  for (const auto& c : b.codes()) targets.insert(c.bits());
  for (const auto& c : a.codes()) {
    if (!targets.contains(t(c.bits()))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::optional<GraphIsoWitness> graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) {
    throw DimensionError("graphs have " + std::to_string(a.n()) + " and " + std::to_string(b.n()) +
                         " vertices");
  }
  auto images = first_isomorphism(a, b);
  if (!images) return std::nullopt;
  VertexPermutation g(std::move(*images));
  if (!(relabel(a, g.images()) == b)) throw InternalInvariantError("isomorphism search returned a non-isomorphism");
  LinearOperatorGF2 t = operator_from_permutation(a.n(), g);
  if (!is_strong_certificate(encode(a), encode(b), t)) {
    throw InternalInvariantError("operator built from an isomorphism is not a strong certificate");
  }
  return GraphIsoWitness{std::move(g), std::move(t)};
}

std::optional<LinearOperatorGF2> strong_isomorphic(const CodingSequence& a, const CodingSequence& b) {
  if (a.n() != b.n()) throw DimensionError("coding sequences have different n");
  if (a.size() != b.size()) {
    throw DimensionError("coding sequences have " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " codes");
  }
  auto witness = graphs_isomorphic(decode(a), decode(b));
  if (!witness) return std::nullopt;
  return std::move(witness->t);
}

}  // namespace segcode
