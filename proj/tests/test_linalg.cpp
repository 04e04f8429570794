#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "ronco/errors.hpp"
#include "ronco/linalg.hpp"

using namespace ronco;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution keep(density);
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m.set(r, c, oracle::random_rational(rng, 20));
  return m;
}

std::vector<Vector> dense(const SparseMatrix& m) {
  std::vector<Vector> out(m.rows(), Vector(m.cols()));
  for (const auto& [rc, x] : m.entries()) out[rc.first][rc.second] = x;
  return out;
}

}  // namespace

TEST_CASE("rational strings are canonical") {
  CHECK(to_string(Rational(4, 6)) == "2/3");
  CHECK(to_string(Rational(-3, 1)) == "-3");
  CHECK(to_string(Rational(0, 5)) == "0");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
}

TEST_CASE("rank_and_kernel small cases") {
  SUBCASE("empty") {
    auto rk = rank_and_kernel(SparseMatrix(0, 0));
    CHECK(rk.rank == 0);
    CHECK(rk.kernel.empty());
  }
  SUBCASE("empty rows keep the standard basis as kernel") {
    auto rk = rank_and_kernel(SparseMatrix(0, 2));
    CHECK(rk.rank == 0);
    REQUIRE(rk.kernel.size() == 2);
    CHECK(rk.kernel[0] == vec({1, 0}));
    CHECK(rk.kernel[1] == vec({0, 1}));
  }
  SUBCASE("identity") {
    auto rk = rank_and_kernel(SparseMatrix::from_dense({vec({1, 0}), vec({0, 1})}));
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.empty());
  }
  SUBCASE("(1 1)") {
    auto rk = rank_and_kernel(SparseMatrix::from_dense({vec({1, 1})}));
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel.size() == 1);
    CHECK(rk.kernel[0] == vec({-1, 1}));
  }
}

TEST_CASE("rank agrees with dense oracle on random 5x5 and up to 8x8 matrices") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(0, 8);
    const std::size_t rows = trial < 50 ? 5 : dim(rng), cols = trial < 50 ? 5 : dim(rng);
    auto m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 0.3 : 0.7);
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == oracle::dense_rank(dense(m)));
    CHECK(rk.rank + rk.kernel.size() == cols);
    CHECK(rank(m.transpose()) == rk.rank);
    for (const auto& v : rk.kernel) {
      const Vector image = m.apply(v);
      CHECK(std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; }));
    }
    CHECK(oracle::dense_rank(rk.kernel) == rk.kernel.size());
  }
}

TEST_CASE("rank and kernel span are independent of row order") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(rng, 6, 7, 0.5);
    auto rows = dense(m);
    std::shuffle(rows.begin(), rows.end(), rng);
    auto a = rank_and_kernel(m), b = rank_and_kernel(SparseMatrix::from_dense(rows));
    CHECK(a.rank == b.rank);
    // Same free columns, and each kernel vector is normalized on them, so the bases coincide.
    CHECK(a.kernel == b.kernel);
  }
}

TEST_CASE("low-rank products") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_matrix(rng, 8, 3, 0.9), b = random_matrix(rng, 3, 8, 0.9);
    auto p = a * b;
    CHECK(rank(p) == oracle::dense_rank(dense(p)));
    CHECK(rank(p) <= 3);
  }
}

TEST_CASE("quotient_dim") {
  CHECK(quotient_dim(3, std::span<const Vector>{}) == 3);
  std::vector<Vector> full{vec({1, 0}), vec({0, 1})};
  CHECK(quotient_dim(2, full) == 0);
  std::vector<Vector> dependent{vec({1, -1, 0}), vec({0, 1, -1}), vec({1, 0, -1})};
  CHECK(quotient_dim(3, dependent) == 1);
  CHECK(oracle::dense_rank(dependent) == 2);
  std::vector<Vector> bad{vec({1, 0})};
  CHECK_THROWS_AS(quotient_dim(3, bad), DimensionMismatch);
}

TEST_CASE("Subspace keeps reduced echelon form") {
  Subspace s(3);
  CHECK(s.insert(to_sparse(vec({1, 2, 3}))));
  CHECK(s.insert(to_sparse(vec({0, 1, 1}))));
  CHECK_FALSE(s.insert(to_sparse(vec({2, 5, 7}))));
  CHECK(s.dim() == 2);
  CHECK(s.pivots() == std::vector<std::size_t>{0, 1});
  CHECK(s.non_pivots() == std::vector<std::size_t>{2});
  auto basis = s.basis();
  CHECK(basis[0].coeff(1) == 0);
  CHECK(s.contains(to_sparse(vec({1, 3, 4}))));
  CHECK_FALSE(s.contains(to_sparse(vec({0, 0, 1}))));
}

TEST_CASE("matrix shape errors") {
  SparseMatrix m(2, 2);
  CHECK_THROWS_AS(m.set(2, 0, 1), DimensionMismatch);
  CHECK_THROWS_AS(m.apply(vec({1, 2, 3})), DimensionMismatch);
  CHECK_THROWS_AS(m * SparseMatrix(3, 1), DimensionMismatch);
}
