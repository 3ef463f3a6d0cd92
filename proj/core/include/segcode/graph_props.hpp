#pragma once

// Graph properties read off a coding sequence with linear algebra.
//
// Edge sets map to sets of segment vectors; cycles are exactly the reduced
// sets with zero sum, paths the reduced sets whose sum is again a segment, and
// spanning trees the subsets that are bases of GF(2)^(n-1).

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "segcode/coding.hpp"

namespace segcode {

enum class WitnessKind { cycle, path, hamiltonian_cycle, odd_circuit };

struct ReducedSetWitness {
  std::vector<EdgeCode> subset;
  WitnessKind kind;
};

/// No proper nonempty subset sums to zero. Throws DegenerateError if empty.
bool is_reduced(std::span<const EdgeCode> set);

/// The decoded edges form one cycle: set is reduced and sums to zero.
/// Throws DegenerateError if fewer than 3 codes.
bool detect_cycle_set(std::span<const EdgeCode> set);

bool is_acyclic(const CodingSequence& s);
bool is_tree(const CodingSequence& s);
bool is_connected(const CodingSequence& s);

/// Receives each spanning tree as a σ-ordered subset of the sequence.
using SubsetVisitor = std::function<void(std::span<const EdgeCode>)>;

constexpr std::size_t kDefaultSpanningTreeCap = 1'000'000;

/// Visits every (n-1)-subset of the codes that is a basis, in lexicographic
/// order of σ positions. Returns the number visited. Throws NotConnectedError
/// for a disconnected input and CapExceededError once more than cap trees
/// exist (after visiting cap of them).
std::size_t enumerate_spanning_trees(const CodingSequence& s, const SubsetVisitor& visitor,
                                     std::size_t cap = kDefaultSpanningTreeCap);

/// Nonempty, at most one component with edges, and the codes sum to zero.
bool is_eulerian(const CodingSequence& s);

/// No odd-size subset of the codes sums to zero. Throws LabelError if n < 2.
bool is_bipartite(const CodingSequence& s);

/// A reduced n-subset with zero sum (a Hamiltonian cycle), the first in
/// lexicographic order of σ positions. Throws DegenerateError if n < 3.
std::optional<ReducedSetWitness> find_hamiltonian_cycle(const CodingSequence& s);

/// If set is reduced and its sum is a segment, returns the sum: the code
/// joining the two ends of the path. Throws DegenerateError if empty.
std::optional<EdgeCode> is_path_set(std::span<const EdgeCode> set);

}  // namespace segcode
