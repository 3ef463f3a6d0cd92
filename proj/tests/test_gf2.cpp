#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "segcode/errors.hpp"
#include "segcode/gf2.hpp"

using namespace segcode;

namespace {

GF2Vector v(const char* bits) { return GF2Vector::from_string(bits); }

GF2Vector random_vector(std::size_t len, std::mt19937_64& rng) {
  GF2Vector out(len);
  for (std::size_t k = 0; k < len; ++k) {
    if (rng() & 1U) out.set(k);
  }
  return out;
}

GF2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::vector<GF2Vector> rs;
  for (std::size_t r = 0; r < rows; ++r) rs.push_back(random_vector(cols, rng));
  return GF2Matrix::from_rows(std::move(rs), cols);
}

std::string flat(const GF2Matrix& m) {
  std::string s;
  for (const auto& r : m.row_vectors()) s += r.to_string();
  return s;
}

}  // namespace

TEST_CASE("vector basics") {
  const GF2Vector a = v("0110");
  CHECK(a.size() == 4);
  CHECK_FALSE(a.get(0));
  CHECK(a.get(1));
  CHECK(a.popcount() == 2);
  CHECK(a.first_one() == 1);
  CHECK(a.to_string() == "0110");
  CHECK(GF2Vector::of({0, 1, 1, 0}) == a);
  CHECK(GF2Vector::unit(3, 2) == v("001"));
  CHECK(GF2Vector(5).is_zero());
  CHECK(GF2Vector(0).to_string().empty());
  CHECK_THROWS_AS(a.get(4), DimensionError);
  CHECK_THROWS(GF2Vector::from_string("01x"));
}

TEST_CASE("segment shape") {
  CHECK(v("0110").segment() == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(v("1").is_segment());
  CHECK(v("1111").is_segment());
  CHECK_FALSE(v("1010").is_segment());
  CHECK_FALSE(v("000").is_segment());
  CHECK_FALSE(GF2Vector(0).is_segment());
}

TEST_CASE("vec_add examples") {
  CHECK(vec_add(v("001"), v("010")) == v("011"));
  CHECK(vec_add(v("110"), v("110")) == v("000"));
  CHECK(vec_add(vec_add(v("001"), v("010")), v("011")).is_zero());
  CHECK_THROWS_AS(vec_add(v("01"), v("011")), DimensionError);
}

TEST_CASE("vectors longer than one word") {
  GF2Vector a(130);
  a.set(3);
  a.set(64);
  a.set(129);
  GF2Vector b(130);
  b.set(64);
  CHECK(a.popcount() == 3);
  CHECK((a + b).popcount() == 2);
  CHECK_FALSE((a + b).get(64));
  CHECK(a.dot(b));
  CHECK(GF2Vector::from_string(a.to_string()) == a);
  GF2Vector seg(100);
  for (std::size_t k = 60; k < 70; ++k) seg.set(k);
  CHECK(seg.segment() == std::pair<std::size_t, std::size_t>{60, 69});
  seg.set(99);
  CHECK_FALSE(seg.is_segment());
}

TEST_CASE("addition laws on random vectors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + rng() % 140;
    const auto a = random_vector(len, rng);
    const auto b = random_vector(len, rng);
    const auto c = random_vector(len, rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a + a).is_zero());
  }
}

TEST_CASE("vector ordering and hashing") {
  CHECK(v("001") < v("010"));
  CHECK(v("11") < v("000"));
  CHECK(std::hash<GF2Vector>{}(v("0101")) == std::hash<GF2Vector>{}(v("0101")));
}

TEST_CASE("matrix construction and products") {
  const std::vector<std::string> rows{"011", "101"};
  const GF2Matrix m = GF2Matrix::from_strings(rows);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.column(0) == v("01"));
  CHECK(m.transpose().row(2) == v("11"));
  CHECK(m.apply(v("111")) == v("00"));
  CHECK(m.to_string() == "011\n101\n");
  const auto cols = m.columns();
  CHECK(GF2Matrix::from_columns(cols, 2) == m);
  CHECK(GF2Matrix::identity(2) * m == m);
  CHECK(m * GF2Matrix::identity(3) == m);
  CHECK_THROWS_AS(m * m, DimensionError);
}

TEST_CASE("matrix product is associative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(4, 5, rng);
    const auto b = random_matrix(5, 3, rng);
    const auto c = random_matrix(3, 6, rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(GF2Matrix::identity(3)) == 3);
  const std::vector<std::string> full{"001", "011", "111"};
  CHECK(rank(GF2Matrix::from_strings(full)) == 3);
  const std::vector<std::string> deficient{"001", "010", "011"};
  CHECK(rank(GF2Matrix::from_strings(deficient)) == 2);
  CHECK(rank(GF2Matrix()) == 0);
  CHECK(rank(GF2Matrix(3, 0)) == 0);
}

TEST_CASE("rank equals rank of the transpose") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_matrix(1 + rng() % 8, 1 + rng() % 8, rng);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("independence, span and basis examples") {
  CHECK(is_independent(std::vector<GF2Vector>{}));
  CHECK(is_independent(std::vector{v("001"), v("010"), v("100")}));
  CHECK_FALSE(is_independent(std::vector{v("001"), v("010"), v("011")}));
  CHECK_THROWS_AS(is_independent(std::vector{v("001"), v("01")}), DimensionError);

  CHECK(span_contains(std::vector{v("01"), v("10")}, v("11")));
  CHECK(span_contains(std::vector<GF2Vector>{}, v("00")));
  CHECK_FALSE(span_contains(std::vector{v("011"), v("001")}, v("100")));
  CHECK_THROWS_AS(span_contains(std::vector{v("011")}, v("10")), DimensionError);

  CHECK(is_basis(std::vector{v("001"), v("011"), v("111")}, 3));
  CHECK_FALSE(is_basis(std::vector{v("01"), v("10"), v("11")}, 2));
  CHECK(is_basis(std::vector<GF2Vector>{}, 0));
  CHECK_FALSE(is_basis(std::vector{v("01")}, 2));
}

TEST_CASE("independence and span agree with rank") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = 1 + rng() % 7;
    std::vector<GF2Vector> s;
    const std::size_t count = rng() % 7;
    for (std::size_t k = 0; k < count; ++k) s.push_back(random_vector(len, rng));
    CHECK(is_independent(s) == (rank(s) == s.size()));
    const auto x = random_vector(len, rng);
    auto with_x = s;
    with_x.push_back(x);
    CHECK(span_contains(s, x) == (rank(s) == rank(with_x)));
  }
}

TEST_CASE("echelon basis") {
  EchelonBasis basis(3);
  CHECK(basis.insert(v("011")));
  CHECK(basis.insert(v("001")));
  CHECK_FALSE(basis.insert(v("010")));
  CHECK(basis.rank() == 2);
  CHECK(basis.contains(v("000")));
  CHECK_FALSE(basis.contains(v("100")));
}

TEST_CASE("nullspace of columns") {
  // Columns 001, 010, 011, 100: the only relation is c0 + c1 + c2 = 0.
  const auto null = nullspace_of_columns(std::vector{v("001"), v("010"), v("011"), v("100")});
  REQUIRE(null.size() == 1);
  CHECK(null[0] == v("1110"));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    std::vector<GF2Vector> cols;
    const std::size_t m = 1 + rng() % 8;
    for (std::size_t k = 0; k < m; ++k) cols.push_back(random_vector(rows, rng));
    const auto basis = nullspace_of_columns(cols);
    CHECK(basis.size() == m - rank(cols));
    CHECK(is_independent(basis));
    for (const auto& x : basis) {
      GF2Vector sum(rows);
      for (std::size_t k = 0; k < m; ++k) {
        if (x.get(k)) sum += cols[k];
      }
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("nonsingular matrices") {
  CHECK(is_nonsingular(GF2Matrix::identity(4)));
  const std::vector<std::string> singular{"11", "11"};
  CHECK_FALSE(is_nonsingular(GF2Matrix::from_strings(singular)));
  CHECK_FALSE(is_nonsingular(GF2Matrix(2, 3)));
}

TEST_CASE("enumerate_nonsingular counts and order") {
  CHECK(count_nonsingular(1) == 1);
  CHECK(count_nonsingular(2) == 6);
  CHECK(count_nonsingular(3) == 168);
  CHECK(count_nonsingular(4) == 20160);
  for (std::size_t d = 1; d <= 4; ++d) {
    std::set<std::string> seen;
    std::string previous;
    bool ordered = true;
    bool full_rank = true;
    const std::size_t visited = enumerate_nonsingular(d, [&](const GF2Matrix& m) {
      const std::string s = flat(m);
      if (!previous.empty() && !(previous < s)) ordered = false;
      if (rank(m) != d) full_rank = false;
      previous = s;
      seen.insert(s);
      return true;
    });
    // (2^d - 1)(2^d - 2)...(2^d - 2^(d-1))
    std::uint64_t expected = 1;
    for (std::size_t k = 0; k < d; ++k) expected *= (std::uint64_t{1} << d) - (std::uint64_t{1} << k);
    CHECK(visited == expected);
    CHECK(seen.size() == expected);
    CHECK(ordered);
    CHECK(full_rank);
  }
}

TEST_CASE("enumerate_nonsingular stops early and respects the cap") {
  std::size_t calls = 0;
  enumerate_nonsingular(3, [&](const GF2Matrix&) { return ++calls < 10; });
  CHECK(calls == 10);
  CHECK_THROWS_AS(enumerate_nonsingular(6, [](const GF2Matrix&) { return true; }), CapExceededError);
  try {
    enumerate_nonsingular(4, [](const GF2Matrix&) { return true; }, 3);
    FAIL("expected a cap error");
  } catch (const CapExceededError& e) {
    CHECK(e.cap() == 3);
    CHECK(std::string(e.what()).find("cap 3") != std::string::npos);
  }
}

TEST_CASE("the first nonsingular matrix in row order") {
  GF2Matrix first;
  enumerate_nonsingular(3, [&](const GF2Matrix& m) {
    first = m;
    return false;
  });
  CHECK(first.to_string() == "001\n010\n100\n");
}
