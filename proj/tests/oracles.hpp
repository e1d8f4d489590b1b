#pragma once

// Test-only reference computations. Nothing here calls into the decoding
// paths it is used to check.

#include <cstdint>
#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gmsr/field.hpp"
#include "gmsr/params.hpp"

namespace oracle {

using gmsr::Symbol;

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return a * b % q; }

inline std::uint64_t naive_pow(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  for (std::uint64_t i = 0; i < e; ++i) r = mod_mul(r, a, q);
  return r;
}

inline std::optional<std::uint64_t> scan_inverse(std::uint64_t a, std::uint64_t q) {
  for (std::uint64_t b = 1; b < q; ++b) {
    if (mod_mul(a, b, q) == 1) return b;
  }
  return std::nullopt;
}

/// Distinct alpha-th powers of nonzero elements, counted by enumeration.
inline std::size_t distinct_powers(std::uint64_t q, std::uint64_t alpha) {
  std::set<std::uint64_t> s;
  for (std::uint64_t x = 1; x < q; ++x) s.insert(naive_pow(x, alpha, q));
  return s.size();
}

using Grid = std::vector<std::vector<std::int64_t>>;

/// Plain Gauss-Jordan over GF(q) on a dense augmented grid. Returns nullopt
/// when the coefficient part is singular.
inline std::optional<Grid> solve(Grid a, Grid b, std::int64_t q) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  auto inv = [&](std::int64_t v) {
    return static_cast<std::int64_t>(*scan_inverse(static_cast<std::uint64_t>(v), q));
  };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] % q == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    std::int64_t iv = inv(a[col][col] % q);
    for (auto& v : a[col]) v = v * iv % q;
    for (auto& v : b[col]) v = v * iv % q;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      std::int64_t f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = ((a[r][c] - f * a[col][c]) % q + q) % q;
      for (std::size_t c = 0; c < m; ++c) b[r][c] = ((b[r][c] - f * b[col][c]) % q + q) % q;
    }
  }
  return b;
}

/// Solves rhs = Omega T1 + Lambda Omega T2 by treating the upper triangles of
/// T1 and T2 as k(k-1) unknowns in one stacked linear system.
inline std::optional<std::pair<Grid, Grid>> stacked_symmetric_solve(const Grid& omega,
                                                                    const std::vector<std::int64_t>& lambdas,
                                                                    const Grid& rhs, std::int64_t q) {
  const std::size_t k = omega.size();
  const std::size_t a = k - 1;
  std::vector<std::pair<std::size_t, std::size_t>> tri;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = u; v < a; ++v) tri.emplace_back(u, v);
  const std::size_t unknowns = 2 * tri.size();
  Grid coef(k * a, std::vector<std::int64_t>(unknowns, 0));
  Grid vals(k * a, std::vector<std::int64_t>(1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < a; ++c) {
      auto& row = coef[i * a + c];
      vals[i * a + c][0] = rhs[i][c];
      for (std::size_t t = 0; t < tri.size(); ++t) {
        auto [u, v] = tri[t];
        std::int64_t w = 0;
        // T[u][v] appears at (u, v) and (v, u).
        if (v == c) w += omega[i][u];
        if (u == c && u != v) w += omega[i][v];
        row[t] = (row[t] + w) % q;
        row[tri.size() + t] = (row[tri.size() + t] + lambdas[i] * w) % q;
      }
    }
  }
  auto sol = solve(coef, vals, q);
  if (!sol) return std::nullopt;
  Grid t1(a, std::vector<std::int64_t>(a)), t2 = t1;
  for (std::size_t t = 0; t < tri.size(); ++t) {
    auto [u, v] = tri[t];
    t1[u][v] = t1[v][u] = (*sol)[t][0];
    t2[u][v] = t2[v][u] = (*sol)[tri.size() + t][0];
  }
  return std::make_pair(t1, t2);
}

/// Labels every entry of the d x alpha message matrix straight from the
/// block displays (symmetric pairs share a label, zeros get ""), then lists
/// first appearances in row-major order as (row, col, block).
struct LabeledPosition {
  std::size_t row, col;
  std::string block;
  bool operator==(const LabeledPosition&) const = default;
};

inline std::vector<LabeledPosition> enumerate_positions(std::uint32_t k, std::uint32_t d) {
  const std::uint32_t alpha = d - k + 1;
  std::vector<std::vector<std::string>> label(d, std::vector<std::string>(alpha));
  std::vector<std::vector<std::string>> block(d, std::vector<std::string>(alpha));
  auto sym = [](const std::string& name, std::size_t i, std::size_t j) {
    return name + "(" + std::to_string(std::min(i, j)) + "," + std::to_string(std::max(i, j)) + ")";
  };
  auto set = [&](std::size_t r, std::size_t c, const std::string& l, const std::string& b) {
    label[r][c] = l;
    block[r][c] = b;
  };
  const std::size_t a = k - 1;
  if (k >= 2 && d == 2 * k - 2) {  // [T1; T2]
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) {
        set(i, j, sym("T1", i, j), "T1");
        set(a + i, j, sym("T2", i, j), "T2");
      }
  } else {
    // Symmetric alpha x alpha head built from T1, U1, U2, V1, V2 (k >= 2) or
    // U2, V2 (k == 1), then T2 | O2 underneath.
    const std::size_t w = alpha - k;  // V width
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) set(i, j, sym("T1", i, j), "T1");
    for (std::size_t i = 0; i < a; ++i) {
      set(i, a, "U1(" + std::to_string(i) + ")", "U1");
      set(a, i, "U1(" + std::to_string(i) + ")", "U1");
    }
    set(a, a, "U2", "U2");
    for (std::size_t j = 0; j < w; ++j) {
      for (std::size_t i = 0; i < a; ++i) {
        std::string l = "V1(" + std::to_string(i) + "," + std::to_string(j) + ")";
        set(i, a + 1 + j, l, "V1");
        set(a + 1 + j, i, l, "V1");
      }
      std::string l = "V2(" + std::to_string(j) + ")";
      set(a, a + 1 + j, l, "V2");
      set(a + 1 + j, a, l, "V2");
    }
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) set(alpha + i, j, sym("T2", i, j), "T2");
  }
  std::vector<LabeledPosition> out;
  std::set<std::string> seen;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < alpha; ++c)
      if (!label[r][c].empty() && seen.insert(label[r][c]).second) out.push_back({r, c, block[r][c]});
  return out;
}

/// c_i = rho_i M computed entry by entry with plain integer arithmetic.
inline std::vector<std::int64_t> share_of(const Grid& m, std::int64_t x, std::int64_t q) {
  const std::size_t d = m.size();
  const std::size_t alpha = m[0].size();
  std::vector<std::int64_t> c(alpha, 0);
  std::int64_t p = 1;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j < alpha; ++j) c[j] = (c[j] + p * m[r][j]) % q;
    p = p * x % q;
  }
  return c;
}

inline std::vector<Symbol> random_symbols(std::mt19937_64& rng, std::size_t count, std::uint32_t q) {
  std::uniform_int_distribution<Symbol> dist(0, q - 1);
  std::vector<Symbol> out(count);
  for (auto& s : out) s = dist(rng);
  return out;
}

/// Random sorted subset of `size` distinct values drawn from `pool`.
inline std::vector<std::uint32_t> random_subset(std::mt19937_64& rng, std::vector<std::uint32_t> pool,
                                                std::size_t size) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

/// All ascending size-subsets of {1..n}.
inline std::vector<std::vector<std::uint32_t>> all_subsets(std::uint32_t n, std::size_t size,
                                                          std::uint32_t skip = 0) {
  std::vector<std::uint32_t> pool;
  for (std::uint32_t i = 1; i <= n; ++i)
    if (i != skip) pool.push_back(i);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> mask(pool.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
  do {
    std::vector<std::uint32_t> s;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask[i]) s.push_back(pool[i]);
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

}  // namespace oracle
