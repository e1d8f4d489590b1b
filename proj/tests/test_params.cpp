#include <doctest.h>

#include <set>

#include "gmsr/params.hpp"
#include "oracles.hpp"

using namespace gmsr;

TEST_CASE("derive_params") {
  SUBCASE("worked example code") {
    auto p = derive_params(10, 2, 4, 11);
    CHECK(p.alpha == 3);
    CHECK(p.B == 6);
    CHECK(p.type == MatrixType::III);
    CHECK(p.points == std::vector<Symbol>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  }
  SUBCASE("GF(2) cannot host three nodes") {
    CHECK_THROWS_AS(derive_params(3, 1, 1, 2), InfeasibleField);
  }
  SUBCASE("type II over GF(11)") {
    auto p = derive_params(4, 2, 3, 11);
    CHECK(p.alpha == 2);
    CHECK(p.B == 4);
    CHECK(p.type == MatrixType::II);
    CHECK(p.points == std::vector<Symbol>{1, 2, 3, 4});
  }
  SUBCASE("constraint violations") {
    CHECK_THROWS_AS(derive_params(10, 0, 4, 11), InvalidParams);
    CHECK_THROWS_AS(derive_params(10, 4, 5, 11), InvalidParams);   // d < 2k-2
    CHECK_THROWS_AS(derive_params(4, 2, 4, 11), InvalidParams);    // d > n-1
    CHECK_THROWS_AS(derive_params(10, 2, 4, 12), InvalidParams);   // q not prime
    CHECK_THROWS_AS(derive_params(2, 1, 0, 11), InvalidParams);
    CHECK_THROWS_AS(derive_params(0, 1, 1, 11), InvalidParams);
  }
}

TEST_CASE("matrix type table") {
  CHECK(matrix_type_for(2, 2) == MatrixType::I);
  CHECK(matrix_type_for(4, 6) == MatrixType::I);
  CHECK(matrix_type_for(3, 5) == MatrixType::II);
  CHECK(matrix_type_for(2, 4) == MatrixType::III);
  CHECK(matrix_type_for(3, 9) == MatrixType::III);
  CHECK(matrix_type_for(1, 1) == MatrixType::IV);
  CHECK(matrix_type_for(1, 2) == MatrixType::V);
  CHECK(matrix_type_for(1, 7) == MatrixType::V);
}

TEST_CASE("select_points") {
  CHECK(select_points(11, 10, 3) == std::vector<Symbol>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(select_points(5, 2, 2) == std::vector<Symbol>{1, 2});
  CHECK_THROWS_AS(select_points(5, 3, 2), InfeasibleField);
  CHECK(select_points(11, 10, 3) == select_points(11, 10, 3));
}

TEST_CASE("infeasible field error names the bound") {
  try {
    select_points(5, 3, 2);
    FAIL("expected InfeasibleField");
  } catch (const InfeasibleField& e) {
    CHECK(std::string(e.what()).find("only 2") != std::string::npos);
  }
}

TEST_CASE("feasibility_bound") {
  CHECK(feasibility_bound(11, 3) == 10);
  CHECK(feasibility_bound(5, 2) == 2);
  for (std::uint32_t q : {2u, 7u, 257u}) CHECK(feasibility_bound(q, 1) == q - 1);
}

TEST_CASE("feasibility bound matches enumeration and decides select_points") {
  for (std::uint32_t q = 2; q <= 100; ++q) {
    if (!is_prime(q)) continue;
    for (std::uint32_t alpha = 1; alpha <= 10; ++alpha) {
      const auto bound = feasibility_bound(q, alpha);
      REQUIRE(bound == oracle::distinct_powers(q, alpha));
      for (std::uint32_t n = 1; n <= q - 1; ++n) {
        bool ok = true;
        try {
          select_points(q, n, alpha);
        } catch (const InfeasibleField&) {
          ok = false;
        }
        REQUIRE(ok == (bound >= n));
      }
    }
  }
}

TEST_CASE("accepted points satisfy the node conditions") {
  for (std::uint32_t q : {7u, 11u, 13u, 31u, 257u}) {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      for (std::uint32_t d = std::max(1u, 2 * k - 2); d <= 9; ++d) {
        for (std::uint32_t n = d + 1; n <= d + 3; ++n) {
          CodeParams p;
          try {
            p = derive_params(n, k, d, q);
          } catch (const InfeasibleField&) {
            continue;
          }
          REQUIRE(p.points.size() == n);
          std::set<std::uint64_t> pts, pows;
          for (Symbol x : p.points) {
            REQUIRE(x != 0);
            pts.insert(x);
            pows.insert(oracle::naive_pow(x, p.alpha, q));
          }
          REQUIRE(pts.size() == n);
          REQUIRE(pows.size() == n);
        }
      }
    }
  }
}

TEST_CASE("q >= n alpha admits points except at q = n, alpha = 1") {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    for (std::uint32_t alpha = 1; alpha <= 6; ++alpha) {
      std::uint32_t q = n * alpha;
      while (!is_prime(q)) ++q;
      if (alpha == 1 && q == n) {
        // only n - 1 nonzero elements exist
        CHECK_THROWS_AS(select_points(q, n, alpha), InfeasibleField);
        CHECK_NOTHROW(select_points(q, n - 1, alpha));
      } else {
        CHECK_NOTHROW(select_points(q, n, alpha));
      }
    }
  }
}

TEST_CASE("smallest_feasible_prime") {
  CHECK(smallest_feasible_prime(10, 3) == 11);
  CHECK(smallest_feasible_prime(3, 2) == 7);  // GF(5) has only 2 distinct squares
  CHECK(smallest_feasible_prime(2, 1) == 3);
}
