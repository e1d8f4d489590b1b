#include <doctest.h>

#include <random>

#include "gmsr/field.hpp"
#include "gmsr/matrix.hpp"
#include "oracles.hpp"

using namespace gmsr;

TEST_CASE("field construction rejects non-primes and oversized moduli") {
  CHECK_THROWS_AS(Field(1), InvalidParams);
  CHECK_THROWS_AS(Field(12), InvalidParams);
  CHECK_THROWS_AS(Field(2147483659u), InvalidParams);  // prime, but >= 2^31
  CHECK_NOTHROW(Field(2));
  CHECK_NOTHROW(Field(2147483647u));
}

TEST_CASE("ff_add") {
  Field f(11);
  for (std::uint64_t x = 0; x < 11; ++x) CHECK(ff_add(FieldElement(f, 0), FieldElement(f, x)).value() == x);
  CHECK(ff_add(FieldElement(f, 7), FieldElement(f, 5)).value() == 1);
  CHECK(ff_add(FieldElement(f, 10), FieldElement(f, 1)).value() == 0);
}

TEST_CASE("ff_mul") {
  Field f(11);
  for (std::uint64_t x = 0; x < 11; ++x) CHECK(ff_mul(FieldElement(f, 1), FieldElement(f, x)).value() == x);
  CHECK(ff_mul(FieldElement(f, 10), FieldElement(f, 8)).value() == 3);
  CHECK(ff_mul(FieldElement(f, 2), FieldElement(f, 6)).value() == 1);
}

TEST_CASE("ff_pow") {
  Field f(11);
  CHECK(ff_pow(FieldElement(f, 2), 3).value() == 8);
  CHECK(ff_pow(FieldElement(f, 9), 3).value() == 3);
  for (std::uint64_t x = 0; x < 11; ++x) CHECK(ff_pow(FieldElement(f, x), 0).value() == 1);
}

TEST_CASE("ff_inv") {
  Field f(11);
  CHECK(ff_inv(FieldElement(f, 1)).value() == 1);
  CHECK(ff_inv(FieldElement(f, 4)).value() == 3);
  CHECK_THROWS_AS(ff_inv(FieldElement(f, 0)), DivisionByZero);
}

TEST_CASE("mixing moduli is rejected") {
  Field f11(11), f13(13);
  CHECK_THROWS_AS(FieldElement(f11, 3) + FieldElement(f13, 3), ModulusMismatch);
  CHECK_THROWS_AS(FieldElement(f11, 3) * FieldElement(f13, 3), ModulusMismatch);
  CHECK_THROWS_AS(mat_mul(Matrix::identity(f11, 2), Matrix::identity(f13, 2)), ModulusMismatch);
}

TEST_CASE("every nonzero element times its inverse is one") {
  for (std::uint32_t q : {2u, 3u, 5u, 11u, 257u, 65537u}) {
    Field f(q);
    for (Symbol a = 1; a < q; ++a) {
      REQUIRE(f.mul(a, f.inv(a)) == 1);
      if (q < 300) REQUIRE(f.inv(a) == *oracle::scan_inverse(a, q));
    }
  }
}

TEST_CASE("pow agrees with repeated multiplication") {
  for (std::uint32_t q : {2u, 3u, 5u, 11u, 257u}) {
    Field f(q);
    for (Symbol a = 0; a < q; ++a) {
      for (std::uint64_t e = 0; e <= 12; ++e) REQUIRE(f.pow(a, e) == oracle::naive_pow(a, e, q));
    }
  }
}

TEST_CASE("large modulus products do not overflow") {
  Field f(2147483647u);
  Symbol a = 2147483646u;  // -1
  CHECK(f.mul(a, a) == 1);
  CHECK(f.add(a, a) == 2147483645u);
  CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("mat_mul") {
  Field f(11);
  Matrix m(f, {{1, 2, 3}, {2, 4, 5}, {3, 5, 0}, {6, 0, 0}});
  CHECK(Matrix::identity(f, 4) * m == m);
  CHECK(Matrix(f, {{1, 1, 1, 1}}) * m == Matrix(f, {{1, 0, 8}}));
  CHECK(Matrix(f, {{1, 10, 1, 10}}) * m == Matrix(f, {{7, 3, 9}}));
  CHECK_THROWS_AS(m * m, DimensionMismatch);
}

TEST_CASE("mat_solve") {
  Field f(11);
  CHECK(mat_solve(Matrix(f, {{1, 1}, {1, 2}}), Matrix(f, {{8}, {2}})) == Matrix(f, {{3}, {5}}));
  Matrix b(f, {{4}, {7}, {1}});
  CHECK(mat_solve(Matrix::identity(f, 3), b) == b);

  const Symbol pts[] = {2, 3, 4, 5};
  Matrix v = Matrix::vandermonde(f, pts, 4);
  CHECK(mat_solve(v, Matrix(f, {{9}, {9}, {1}, {10}})) == Matrix(f, {{6}, {0}, {8}, {6}}));

  CHECK_THROWS_AS(mat_solve(Matrix(f, {{1, 2}, {2, 4}}), Matrix(f, {{1}, {1}})), SingularMatrix);
  CHECK_THROWS_AS(mat_solve(Matrix(f, {{1, 2, 3}}), Matrix(f, {{1}})), DimensionMismatch);
  CHECK_THROWS_AS(mat_solve(Matrix::identity(f, 2), Matrix(f, {{1}})), DimensionMismatch);
}

TEST_CASE("mat_solve needs a row swap when the leading entry is zero") {
  Field f(7);
  Matrix a(f, {{0, 1}, {1, 0}});
  CHECK(mat_solve(a, Matrix(f, {{3}, {5}})) == Matrix(f, {{5}, {3}}));
}

TEST_CASE("mat_inv") {
  Field f(11);
  CHECK(mat_inv(Matrix(f, {{1, 1}, {1, 2}})) == Matrix(f, {{2, 10}, {10, 1}}));
  const Symbol pts[] = {2, 3, 4, 5};
  CHECK(mat_inv(Matrix::vandermonde(f, pts, 4)) ==
        Matrix(f, {{10, 2, 4, 7}, {5, 8, 1, 8}, {2, 0, 5, 4}, {9, 6, 5, 2}}));
  CHECK(mat_inv(Matrix::identity(f, 5)) == Matrix::identity(f, 5));
  CHECK_THROWS_AS(mat_inv(Matrix(f, {{0, 0}, {0, 0}})), SingularMatrix);
}

TEST_CASE("random Vandermonde matrices invert exactly") {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {11u, 13u, 257u, 65537u}) {
    Field f(q);
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t n = 1 + rng() % 7;
      if (n >= q) n = q - 1;
      std::vector<std::uint32_t> pool;
      for (std::uint32_t x = 1; x < q && pool.size() < 64; ++x) pool.push_back(x);
      auto pts = oracle::random_subset(rng, pool, n);
      std::vector<Symbol> points(pts.begin(), pts.end());
      Matrix a = Matrix::vandermonde(f, points, n);
      REQUIRE(a * mat_inv(a) == Matrix::identity(f, n));
    }
  }
}

TEST_CASE("mat_solve satisfies A x = b on 1000 random systems per field") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 11u, 257u}) {
    Field f(q);
    int solved = 0;
    while (solved < 1000) {
      std::size_t n = 1 + rng() % 6;
      Matrix a(f, n, n), b(f, n, 1 + rng() % 3);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = static_cast<Symbol>(rng() % q);
        for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = static_cast<Symbol>(rng() % q);
      }
      try {
        Matrix x = mat_solve(a, b);
        REQUIRE(a * x == b);
        ++solved;
      } catch (const SingularMatrix&) {
        // Singular draws are expected, particularly over GF(2).
      }
    }
  }
}

TEST_CASE("empty blocks behave") {
  Field f(5);
  Matrix a(f, 3, 0), b(f, 0, 2);
  Matrix p = a * b;
  CHECK(p.rows() == 3);
  CHECK(p.cols() == 2);
  CHECK(p.is_zero());
  CHECK(mat_solve(Matrix(f, 0, 0), Matrix(f, 0, 1)).rows() == 0);
}
