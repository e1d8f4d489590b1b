#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gmsr/field.hpp"

namespace gmsr {

/// Shape of the message matrix, fixed by (k, d):
///   k >= 2: d == 2k-2 -> I, d == 2k-1 -> II, d >= 2k -> III
///   k == 1: d == 1 -> IV, d >= 2 -> V
enum class MatrixType { I, II, III, IV, V };

std::string_view to_string(MatrixType t);
MatrixType matrix_type_for(std::uint32_t k, std::uint32_t d);

/// Validated code parameters. Build with derive_params().
struct CodeParams {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t d = 0;
  std::uint32_t q = 0;
  std::uint32_t alpha = 0;  // symbols per share, d - k + 1
  std::uint32_t B = 0;      // message symbols, k * alpha
  MatrixType type = MatrixType::IV;
  std::vector<Symbol> points;  // x_1..x_n, points[i-1] belongs to node i

  Field field() const { return Field(q); }
  Symbol point(std::uint32_t node) const;
  void check_node(std::uint32_t node) const;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Number of distinct alpha-th powers among the nonzero elements of GF(q):
/// (q-1) / gcd(alpha, q-1), since GF(q)* is cyclic.
std::uint32_t feasibility_bound(std::uint32_t q, std::uint32_t alpha);

/// Greedy scan x = 1, 2, ..., q-1 keeping x whenever x^alpha is new.
/// Returns the first n survivors, or throws InfeasibleField.
std::vector<Symbol> select_points(std::uint32_t q, std::uint32_t n, std::uint32_t alpha);

CodeParams derive_params(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t q);

/// Smallest prime q with feasibility_bound(q, alpha) >= n.
std::uint32_t smallest_feasible_prime(std::uint32_t n, std::uint32_t alpha);

}  // namespace gmsr
