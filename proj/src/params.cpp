#include "gmsr/params.hpp"

#include <numeric>
#include <string>
#include <unordered_set>

namespace gmsr {

std::string_view to_string(MatrixType t) {
  switch (t) {
    case MatrixType::I: return "I";
    case MatrixType::II: return "II";
    case MatrixType::III: return "III";
    case MatrixType::IV: return "IV";
    case MatrixType::V: return "V";
  }
  return "?";
}

MatrixType matrix_type_for(std::uint32_t k, std::uint32_t d) {
  if (k == 1) return d == 1 ? MatrixType::IV : MatrixType::V;
  if (d == 2 * k - 2) return MatrixType::I;
  if (d == 2 * k - 1) return MatrixType::II;
  return MatrixType::III;
}

Symbol CodeParams::point(std::uint32_t node) const {
  check_node(node);
  return points[node - 1];
}

void CodeParams::check_node(std::uint32_t node) const {
  if (node < 1 || node > n) {
    throw IndexOutOfRange("node " + std::to_string(node) + " outside [1, " +
                          std::to_string(n) + "]");
  }
}

std::uint32_t feasibility_bound(std::uint32_t q, std::uint32_t alpha) {
  return (q - 1) / std::gcd(alpha, q - 1);
}

std::vector<Symbol> select_points(std::uint32_t q, std::uint32_t n, std::uint32_t alpha) {
  const Field f(q);
  std::vector<Symbol> points;
  std::unordered_set<Symbol> seen_powers;
  for (Symbol x = 1; x < q && points.size() < n; ++x) {
    if (seen_powers.insert(f.pow(x, alpha)).second) points.push_back(x);
  }
  if (points.size() < n) {
    throw InfeasibleField("GF(" + std::to_string(q) + ") has only " +
                          std::to_string(feasibility_bound(q, alpha)) +
                          " nonzero elements with distinct " + std::to_string(alpha) +
                          "-th powers, need n = " + std::to_string(n));
  }
  return points;
}

CodeParams derive_params(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t q) {
  auto fail = [&](const std::string& what) {
    throw InvalidParams(what + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                        ", d=" + std::to_string(d) + ", q=" + std::to_string(q) + ")");
  };
  if (k < 1) fail("k >= 1 violated");
  if (d < 1) fail("d >= 1 violated");
  if (d < 2 * k - 2) fail("d >= 2k-2 violated");
  if (d > n - 1 || n == 0) fail("d <= n-1 violated");
  Field field(q);  // validates q

  CodeParams p;
  p.n = n;
  p.k = k;
  p.d = d;
  p.q = q;
  p.alpha = d - k + 1;
  p.B = k * p.alpha;
  p.type = matrix_type_for(k, d);
  p.points = select_points(q, n, p.alpha);
  return p;
}

std::uint32_t smallest_feasible_prime(std::uint32_t n, std::uint32_t alpha) {
  for (std::uint32_t q = 2;; ++q) {
    if (is_prime(q) && feasibility_bound(q, alpha) >= n) return q;
  }
}

}  // namespace gmsr
