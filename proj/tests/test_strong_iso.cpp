#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "segcode/errors.hpp"
#include "segcode/strong_iso.hpp"

using namespace segcode;

namespace {

Graph example_graph() {
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {1, 3}};
  return Graph(4, edges);
}

Graph from_edges(int n, std::vector<std::pair<int, int>> edges) { return Graph(n, edges); }

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph two_triangles() { return from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

GF2Matrix matrix(std::vector<std::string> rows) { return GF2Matrix::from_strings(rows); }

bool shares_one_label(const EdgeCode& p, const EdgeCode& q) {
  return (p.hi() == q.hi()) + (p.hi() == q.lo()) + (p.lo() == q.hi()) + (p.lo() == q.lo()) == 1;
}

}  // namespace

TEST_CASE("vertex permutations") {
  const VertexPermutation g({2, 0, 1});
  CHECK(g(0) == 2);
  CHECK(g.inverse()(2) == 0);
  CHECK(g * g.inverse() == VertexPermutation::identity(3));
  CHECK((g * g)(0) == 1);
  CHECK_THROWS_AS(VertexPermutation({0, 0, 1}), LabelError);
  CHECK_THROWS_AS(VertexPermutation({0, 3, 1}), LabelError);
}

TEST_CASE("linear operators must be square and nonsingular") {
  CHECK_THROWS_AS(LinearOperatorGF2(GF2Matrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(LinearOperatorGF2(matrix({"11", "11"})), NotStrongOperatorError);
  CHECK(LinearOperatorGF2(GF2Matrix::identity(3)).dim() == 3);
}

TEST_CASE("operator_from_permutation examples") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(operator_from_permutation(n, VertexPermutation::identity(n)).matrix() ==
          GF2Matrix::identity(static_cast<std::size_t>(n - 1)));
  }
  const auto t = operator_from_permutation(3, VertexPermutation({1, 0, 2}));
  CHECK(t(GF2Vector::from_string("01")).to_string() == "01");
  CHECK(t(GF2Vector::from_string("10")).to_string() == "11");
  CHECK(t(GF2Vector::from_string("11")).to_string() == "10");
  CHECK(preserves_segment_set(3, t.matrix()));

  // The labeling that turns the example coding sequence into its canonical one.
  const VertexPermutation g({3, 2, 0, 1});
  const auto op = operator_from_permutation(4, g);
  const auto a = encode(example_graph());
  const auto b = encode(example_graph(), g.images());
  CHECK(b == canonical_code(example_graph()).code);
  std::set<std::string> images;
  for (const auto& c : a.codes()) images.insert(op(c.bits()).to_string());
  CHECK(images == std::set<std::string>{"001", "010", "011", "100"});
  CHECK(is_strong_certificate(a, b, op));
}

TEST_CASE("operator_from_permutation acts on every code") {
  std::mt19937_64 rng(81);
  for (int n = 2; n <= 9; ++n) {
    const auto all = full_segment_set(n);
    for (int trial = 0; trial < 20; ++trial) {
      const VertexPermutation g(oracle::random_permutation(n, rng));
      const auto t = operator_from_permutation(n, g);
      for (const auto& e : all.codes()) {
        CHECK(t(e.bits()) == EdgeCode::from_pair(n, g(e.hi()), g(e.lo())).bits());
      }
    }
  }
}

TEST_CASE("permutation_from_operator examples") {
  CHECK(permutation_from_operator(5, LinearOperatorGF2(GF2Matrix::identity(4))) == VertexPermutation::identity(5));
  const auto t = operator_from_permutation(3, VertexPermutation({1, 0, 2}));
  CHECK(permutation_from_operator(3, t) == VertexPermutation({1, 0, 2}));
  // Nonsingular but sends 10 to a non-segment.
  CHECK_THROWS_AS(permutation_from_operator(4, LinearOperatorGF2(matrix({"101", "010", "001"}))),
                  NotStrongOperatorError);
  CHECK_THROWS_AS(permutation_from_operator(4, LinearOperatorGF2(GF2Matrix::identity(2))), DimensionError);
}

TEST_CASE("permutation round trip for n = 3..8") {
  std::mt19937_64 rng(83);
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const VertexPermutation g(oracle::random_permutation(n, rng));
      CHECK(permutation_from_operator(n, operator_from_permutation(n, g)) == g);
    }
  }
}

TEST_CASE("small n recover the identity") {
  CHECK(permutation_from_operator(2, operator_from_permutation(2, VertexPermutation({1, 0}))) ==
        VertexPermutation::identity(2));
  CHECK(permutation_from_operator(1, operator_from_permutation(1, VertexPermutation::identity(1))) ==
        VertexPermutation::identity(1));
}

TEST_CASE("is_strong_certificate examples") {
  const auto a = encode(example_graph());
  CHECK(is_strong_certificate(a, a, LinearOperatorGF2(GF2Matrix::identity(3))));
  // Nonsingular, fixes 001, 010, 100 but sends 011 to the non-segment 101.
  const LinearOperatorGF2 bad(matrix({"101", "010", "001"}));
  CHECK_FALSE(preserves_segment_set(4, bad.matrix()));
  CHECK_FALSE(is_strong_certificate(a, a, bad));
  // Strong operator but a and b are different graphs.
  const auto b = encode(cycle_graph(4));
  CHECK_FALSE(is_strong_certificate(a, b, LinearOperatorGF2(GF2Matrix::identity(3))));
  CHECK_THROWS_AS(is_strong_certificate(a, encode(Graph(5)), LinearOperatorGF2(GF2Matrix::identity(3))),
                  DimensionError);
  CHECK_THROWS_AS(is_strong_certificate(a, a, LinearOperatorGF2(GF2Matrix::identity(2))), DimensionError);
}

TEST_CASE("graphs_isomorphic examples") {
  const auto relabeled = relabel(example_graph(), std::vector<int>{3, 2, 0, 1});
  const auto w = graphs_isomorphic(example_graph(), relabeled);
  REQUIRE(w.has_value());
  CHECK(relabel(example_graph(), w->g.images()) == relabeled);
  CHECK(is_strong_certificate(encode(example_graph()), encode(relabeled), w->t));

  const Graph p4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(graphs_isomorphic(p4, star).has_value());
  CHECK_FALSE(graphs_isomorphic(cycle_graph(6), two_triangles()).has_value());
  CHECK_THROWS_AS(graphs_isomorphic(p4, cycle_graph(5)), DimensionError);
  CHECK(graphs_isomorphic(Graph(0), Graph(0)).has_value());
}

TEST_CASE("graphs_isomorphic returns the first permutation") {
  std::mt19937_64 rng(87);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph a = oracle::random_graph(n, rng);
    const Graph b = relabel(a, oracle::random_permutation(n, rng));
    const auto w = graphs_isomorphic(a, b);
    REQUIRE(w.has_value());
    const auto brute = oracle::brute_iso(a, b);
    REQUIRE(brute.has_value());
    CHECK(std::vector<int>(w->g.images().begin(), w->g.images().end()) == *brute);
  }
}

TEST_CASE("strong_isomorphic examples") {
  const auto beta = encode(example_graph());
  const auto canon = canonical_code(example_graph()).code;
  const auto t = strong_isomorphic(beta, canon);
  REQUIRE(t.has_value());
  CHECK(is_strong_certificate(beta, canon, *t));
  CHECK_FALSE(strong_isomorphic(encode(cycle_graph(6)), encode(two_triangles())).has_value());
  const auto self = strong_isomorphic(beta, beta);
  REQUIRE(self.has_value());
  CHECK(self->matrix() == GF2Matrix::identity(3));
  CHECK_THROWS_AS(strong_isomorphic(beta, encode(Graph(4))), DimensionError);
  CHECK_THROWS_AS(strong_isomorphic(beta, encode(Graph(5))), DimensionError);
}

TEST_CASE("sums of three segments with pairwise segment sums") {
  // Either the three codes close a triangle or all three share one label.
  for (int n = 3; n <= 6; ++n) {
    const auto all = full_segment_set(n);
    const auto codes = all.codes();
    for (std::size_t i = 0; i < codes.size(); ++i) {
      for (std::size_t j = i + 1; j < codes.size(); ++j) {
        if (!(codes[i].bits() + codes[j].bits()).is_segment()) continue;
        for (std::size_t k = j + 1; k < codes.size(); ++k) {
          if (!(codes[i].bits() + codes[k].bits()).is_segment()) continue;
          if (!(codes[j].bits() + codes[k].bits()).is_segment()) continue;
          const bool closes = (codes[i].bits() + codes[j].bits() + codes[k].bits()).is_zero();
          std::vector<int> labels{codes[i].hi(), codes[i].lo(), codes[j].hi(), codes[j].lo(),
                                  codes[k].hi(), codes[k].lo()};
          const bool common = std::ranges::any_of(labels, [&](int x) { return std::ranges::count(labels, x) == 3; });
          CHECK(closes != common);
        }
      }
    }
  }
}

TEST_CASE("strong operators preserve segment sums") {
  std::mt19937_64 rng(89);
  for (int n = 3; n <= 6; ++n) {
    const auto all = full_segment_set(n);
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = operator_from_permutation(n, VertexPermutation(oracle::random_permutation(n, rng)));
      REQUIRE(preserves_segment_set(n, t.matrix()));
      for (const auto& p : all.codes()) {
        for (const auto& q : all.codes()) {
          if (p == q) continue;
          CHECK((p.bits() + q.bits()).is_segment() == (t(p.bits()) + t(q.bits())).is_segment());
          CHECK((p.bits() + q.bits()).is_segment() == shares_one_label(p, q));
        }
      }
    }
  }
}

TEST_CASE("operators preserving the segment set come from permutations") {
  // At n = 2 both permutations fix the only code, so there is one operator.
  CHECK(operator_from_permutation(2, VertexPermutation({1, 0})).matrix() == GF2Matrix::identity(1));
  for (int n = 3; n <= 5; ++n) {
    std::set<std::string> from_perms;
    auto perm = oracle::identity(n);
    do {
      from_perms.insert(operator_from_permutation(n, VertexPermutation(perm)).matrix().to_string());
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::string> preserving;
    enumerate_nonsingular(static_cast<std::size_t>(n - 1), [&](const GF2Matrix& m) {
      if (preserves_segment_set(n, m)) preserving.insert(m.to_string());
      return true;
    });
    std::size_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= static_cast<std::size_t>(k);
    CHECK(from_perms.size() == factorial);
    CHECK(preserving == from_perms);
  }
}

TEST_CASE("isomorphism agrees with brute force and canonical codes") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph a = oracle::random_graph(n, rng);
    // Half the pairs are relabelings, so both verdicts occur often.
    const Graph b = trial % 2 == 0 ? relabel(a, oracle::random_permutation(n, rng))
                                   : oracle::random_graph(n, rng, static_cast<double>(a.edge_count()) / (n * (n - 1) / 2));
    const auto w = graphs_isomorphic(a, b);
    CHECK(w.has_value() == oracle::brute_iso(a, b).has_value());
    CHECK(w.has_value() == (canonical_code(a).code == canonical_code(b).code));
    const auto sa = encode(a);
    const auto sb = encode(b);
    if (sa.size() == sb.size()) CHECK(strong_isomorphic(sa, sb).has_value() == w.has_value());
    if (w) {
      CHECK(relabel(a, w->g.images()) == b);
      CHECK(is_strong_certificate(sa, sb, w->t));
      if (n >= 3) CHECK(permutation_from_operator(n, w->t) == w->g);
    }
  }
}
