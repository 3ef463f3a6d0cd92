#include "segcode/graph_props.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "segcode/errors.hpp"

namespace segcode {

namespace {

std::vector<GF2Vector> bits_of(std::span<const EdgeCode> set) {
  std::vector<GF2Vector> out;
  out.reserve(set.size());
  for (const auto& e : set) out.push_back(e.bits());
  return out;
}

GF2Vector sum_of(std::span<const EdgeCode> set) {
  GF2Vector total(set.front().bits().size());
  for (const auto& e : set) total += e.bits();
  return total;
}

}  // namespace

// A nonempty set of distinct nonzero vectors with nullity 0 has no vanishing
// subset at all. With nullity 1 the unique vanishing subset is proper unless it
// is the whole set. With nullity >= 2 at least two distinct nonempty subsets
// vanish, and at most one of them is the whole set.
bool is_reduced(std::span<const EdgeCode> set) {
  if (set.empty()) throw DegenerateError("is_reduced needs a nonempty set");
  const auto vectors = bits_of(set);
  const std::size_t r = rank(vectors);
  if (r == set.size()) return true;
  if (r + 1 == set.size()) return sum_of(set).is_zero();
  return false;
}

bool detect_cycle_set(std::span<const EdgeCode> set) {
  if (set.size() < 3) {
    throw DegenerateError("a cycle needs at least 3 edges, got " + std::to_string(set.size()));
  }
  return sum_of(set).is_zero() && is_reduced(set);
}

bool is_acyclic(const CodingSequence& s) { return is_independent(s.vectors()); }

bool is_tree(const CodingSequence& s) {
  return is_basis(s.vectors(), static_cast<std::size_t>(s.n() - 1));
}

bool is_connected(const CodingSequence& s) {
  return rank(s.vectors()) == static_cast<std::size_t>(s.n() - 1);
}

std::size_t enumerate_spanning_trees(const CodingSequence& s, const SubsetVisitor& visitor,
                                     std::size_t cap) {
  if (!is_connected(s)) throw NotConnectedError("graph is not connected");
  const std::size_t dim = static_cast<std::size_t>(s.n() - 1);
  const auto codes = s.codes();
  std::vector<EdgeCode> chosen;
  chosen.reserve(dim);
  std::size_t count = 0;

  auto recurse = [&](auto&& self, std::size_t start, const EchelonBasis& basis) -> void {
    if (chosen.size() == dim) {
      if (count == cap) throw CapExceededError("spanning tree enumeration", cap);
      ++count;
      visitor(chosen);
      return;
    }
    const std::size_t needed = dim - chosen.size();
    for (std::size_t i = start; i + needed <= codes.size(); ++i) {
      EchelonBasis next = basis;
      if (!next.insert(codes[i].bits())) continue;
      chosen.push_back(codes[i]);
      self(self, i + 1, next);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, EchelonBasis(dim));
  return count;
}

bool is_eulerian(const CodingSequence& s) {
  if (s.empty()) return false;
  if (!sum_of(s.codes()).is_zero()) return false;

  std::vector<int> parent(static_cast<std::size_t>(s.n()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  const Graph g = decode(s);
  for (const Edge& e : g.edges()) parent[static_cast<std::size_t>(find(e.hi))] = find(e.lo);
  int root = -1;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) continue;
    if (root < 0) root = find(v);
    if (find(v) != root) return false;
  }
  return true;
}

// Parity of the subset size is a linear functional on the space of vanishing
// subsets, so it vanishes everywhere iff it vanishes on a basis of that space.
bool is_bipartite(const CodingSequence& s) {
  if (s.n() < 2) throw LabelError("is_bipartite needs n >= 2");
  const auto null = nullspace_of_columns(s.vectors());
  return std::ranges::all_of(null, [](const GF2Vector& x) { return x.popcount() % 2 == 0; });
}

std::optional<ReducedSetWitness> find_hamiltonian_cycle(const CodingSequence& s) {
  if (s.n() < 3) throw DegenerateError("Hamiltonian cycles need n >= 3");
  const auto codes = s.codes();
  const std::size_t n = static_cast<std::size_t>(s.n());
  const std::size_t dim = n - 1;
  if (codes.size() < n) return std::nullopt;

  // The witness is n codes, any n-1 of which are independent and whose total
  // is zero: n-1 independent codes in σ order plus their sum as the last one.
  std::vector<GF2Vector> reachable(codes.size() + 1, GF2Vector(dim));
  for (std::size_t i = codes.size(); i-- > 0;) {
    reachable[i] = reachable[i + 1];
    for (std::size_t k = 0; k < dim; ++k) {
      if (codes[i].bits().get(k)) reachable[i].set(k);
    }
  }
  auto covered = [](const GF2Vector& bits, const GF2Vector& by) {
    const auto a = bits.words();
    const auto b = by.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if ((a[i] & ~b[i]) != 0) return false;
    }
    return true;
  };

  std::vector<std::size_t> chosen;
  std::optional<ReducedSetWitness> found;

  auto recurse = [&](auto&& self, std::size_t start, const EchelonBasis& basis,
                     const GF2Vector& partial) -> bool {
    if (chosen.size() == dim) {
      if (!partial.is_segment()) return false;
      auto closing = EdgeCode::from_bits(partial);
      auto it = std::lower_bound(codes.begin() + static_cast<std::ptrdiff_t>(start), codes.end(), closing);
      if (it == codes.end() || !(*it == closing)) return false;
      ReducedSetWitness w{{}, WitnessKind::hamiltonian_cycle};
      for (std::size_t i : chosen) w.subset.push_back(codes[i]);
      w.subset.push_back(*it);
      found = std::move(w);
      return true;
    }
    const std::size_t needed = n - chosen.size();
    for (std::size_t i = start; i + needed <= codes.size(); ++i) {
      EchelonBasis next = basis;
      if (!next.insert(codes[i].bits())) continue;
      GF2Vector sum = partial + codes[i].bits();
      if (!covered(sum, reachable[i + 1])) continue;
      chosen.push_back(i);
      if (self(self, i + 1, next, sum)) return true;
      chosen.pop_back();
    }
    return false;
  };
  recurse(recurse, 0, EchelonBasis(dim), GF2Vector(dim));
  return found;
}

std::optional<EdgeCode> is_path_set(std::span<const EdgeCode> set) {
  if (set.empty()) throw DegenerateError("is_path_set needs a nonempty set");
  GF2Vector total = sum_of(set);
  if (!total.is_segment() || !is_reduced(set)) return std::nullopt;
  return EdgeCode::from_bits(std::move(total));
}

}  // namespace segcode
