#include "gmsr/codec.hpp"

#include <set>
#include <string>
#include <tuple>

namespace gmsr {

namespace {

std::vector<Symbol> powers(const Field& f, Symbol x, std::size_t from, std::size_t count) {
  std::vector<Symbol> out(count);
  Symbol p = f.pow(x, from);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = p;
    p = f.mul(p, x);
  }
  return out;
}

void check_shares(const CodeParams& params, std::span<const Share> shares) {
  if (shares.size() != params.k) {
    throw LengthMismatch("reconstruction needs exactly k = " + std::to_string(params.k) +
                         " shares, got " + std::to_string(shares.size()));
  }
  std::set<std::uint32_t> nodes;
  for (const auto& s : shares) {
    params.check_node(s.node);
    if (!nodes.insert(s.node).second) {
      throw DuplicateNode("node " + std::to_string(s.node) + " supplied twice");
    }
    if (s.data.size() != params.alpha) {
      throw LengthMismatch("share of node " + std::to_string(s.node) + " has " +
                           std::to_string(s.data.size()) + " symbols, expected " +
                           std::to_string(params.alpha));
    }
    if (s.x != params.point(s.node)) {
      throw InconsistentShares("share of node " + std::to_string(s.node) +
                               " carries point " + std::to_string(s.x) + ", expected " +
                               std::to_string(params.point(s.node)));
    }
    for (Symbol v : s.data) {
      if (v >= params.q) throw SymbolOutOfRange("share symbol " + std::to_string(v));
    }
  }
}

// Solves a square system, reporting singularity as bad geometry.
Matrix solve_points(const Matrix& a, const Matrix& b) {
  try {
    return mat_solve(a, b);
  } catch (const SingularMatrix& e) {
    throw DegeneratePoints(e.what());
  }
}

}  // namespace

CodingVector coding_vector(const CodeParams& params, std::uint32_t node) {
  const Field f = params.field();
  const Symbol x = params.point(node);
  CodingVector cv;
  cv.rho = powers(f, x, 0, params.d);
  cv.omega = powers(f, x, 0, params.k - 1);
  cv.theta = powers(f, x, 0, params.alpha > params.k ? params.alpha - params.k : 0);
  return cv;
}

Share encode_share(const MessageMatrix& mm, std::uint32_t node) {
  const CodeParams& p = mm.params();
  const Field f = p.field();
  Matrix rho = Matrix::row(f, coding_vector(p, node).rho);
  Matrix c = rho * mm.matrix();
  return Share{node, p.point(node), std::vector<Symbol>(c.data().begin(), c.data().end())};
}

std::vector<Share> encode(const MessageMatrix& mm) {
  std::vector<Share> out;
  out.reserve(mm.params().n);
  for (std::uint32_t i = 1; i <= mm.params().n; ++i) out.push_back(encode_share(mm, i));
  return out;
}

std::pair<Matrix, Matrix> reconstruct_symmetric_pair(const Matrix& omega,
                                                     std::span<const Symbol> lambdas,
                                                     const Matrix& rhs) {
  const Field& f = omega.field();
  const std::size_t k = omega.rows();
  const std::size_t a = omega.cols();
  if (a + 1 != k || lambdas.size() != k || rhs.rows() != k || rhs.cols() != a) {
    throw DimensionMismatch("symmetric pair system expects omega k x (k-1), k lambdas and a "
                            "k x (k-1) right-hand side");
  }
  if (a == 0) return {Matrix(f, 0, 0), Matrix(f, 0, 0)};

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (lambdas[i] == lambdas[j]) {
        throw DegeneratePoints("repeated lambda " + std::to_string(lambdas[i]));
      }
    }
  }

  const Matrix p = rhs * omega.transpose();
  Matrix aa(f, k, k);
  Matrix bb(f, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Symbol b = f.div(f.sub(p(i, j), p(j, i)), f.sub(lambdas[i], lambdas[j]));
      Symbol av = f.sub(p(i, j), f.mul(lambdas[i], b));
      aa(i, j) = aa(j, i) = av;
      bb(i, j) = bb(j, i) = b;
    }
  }

  // Rows omega_i T for i < k-1, each solved from the other k-1 nodes.
  auto recover = [&](const Matrix& products) {
    Matrix stacked(f, a, a);
    for (std::size_t i = 0; i < a; ++i) {
      Matrix others(f, a, a);
      Matrix values(f, a, 1);
      std::size_t row = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        others.set_block(row, 0, omega.block(j, 0, 1, a));
        values(row, 0) = products(i, j);
        ++row;
      }
      stacked.set_block(i, 0, solve_points(others, values).transpose());
    }
    Matrix t = solve_points(omega.block(0, 0, a, a), stacked);
    if (!t.is_symmetric()) throw InconsistentShares("recovered block is not symmetric");
    return t;
  };
  return {recover(aa), recover(bb)};
}

std::vector<Symbol> reconstruct(const CodeParams& params, std::span<const Share> shares,
                                ReconstructTrace* trace) {
  check_shares(params, shares);
  const Field f = params.field();
  const std::size_t k = params.k;
  const std::size_t a = k - 1;
  const std::size_t alpha = params.alpha;
  const std::size_t vw = alpha > k ? alpha - k : 0;

  Matrix m(f, params.d, alpha);
  Matrix v(f, 0, 0), u(f, 0, 0), t1(f, 0, 0), t2(f, 0, 0);

  if (params.type == MatrixType::IV) {
    m(0, 0) = shares[0].data[0];
    u = Matrix(f, {{m(0, 0)}});
  } else if (params.type == MatrixType::V) {
    // c_1 = U2 + [x, ..., x^(d-1)] V2^t, [c_2 .. c_alpha] = V2.
    const Share& s = shares[0];
    std::vector<Symbol> xs = powers(f, s.x, 1, alpha - 1);
    std::span<const Symbol> v2(s.data.begin() + 1, s.data.end());
    Symbol u2 = f.sub(s.data[0], dot(f, xs, v2));
    m(0, 0) = u2;
    for (std::size_t c = 1; c < alpha; ++c) m(0, c) = m(c, 0) = s.data[c];
    v = Matrix::row(f, v2);
    u = Matrix(f, {{u2}});
  } else {
    Matrix c(f, k, alpha);
    std::vector<Symbol> xs(k), lambdas(k);
    for (std::size_t i = 0; i < k; ++i) {
      c.set_block(i, 0, Matrix::row(f, shares[i].data));
      xs[i] = shares[i].x;
      lambdas[i] = f.pow(xs[i], alpha);
    }
    const Matrix omega = Matrix::vandermonde(f, xs, a);
    Matrix lhs = c.block(0, 0, k, a);

    if (params.type != MatrixType::I) {
      // [Omega x_DC] is the k x k Vandermonde of the collector's points.
      const Matrix vk = Matrix::vandermonde(f, xs, k);
      Matrix theta(f, k, vw);  // rows x^k theta_i
      for (std::size_t i = 0; i < k; ++i) {
        theta.set_block(i, 0, Matrix::row(f, powers(f, xs[i], k, vw)));
      }
      // Step 1: [V1; V2] from columns k+1..alpha.
      v = vw ? solve_points(vk, c.block(0, k, k, vw)) : Matrix(f, k, 0);
      const Matrix v1 = v.block(0, 0, a, vw);
      const Matrix v2 = v.block(a, 0, 1, vw);
      // Step 2: [U1; U2] from column k after removing the V2 contribution.
      u = solve_points(vk, c.block(0, a, k, 1) - theta * v2.transpose());
      const Matrix u1 = u.block(0, 0, a, 1);
      // Step 3 right-hand side: strip the U1 and V1 contributions.
      Matrix xtheta(f, k, 1 + vw);
      for (std::size_t i = 0; i < k; ++i) xtheta(i, 0) = f.pow(xs[i], a);
      xtheta.set_block(0, 1, theta);
      Matrix uv(f, 1 + vw, a);
      uv.set_block(0, 0, u1.transpose());
      uv.set_block(1, 0, v1.transpose());
      lhs = lhs - xtheta * uv;

      m.set_block(0, a, u);
      m.set_block(a, 0, u.transpose());
      if (vw) {
        m.set_block(0, k, v);
        m.set_block(k, 0, v.transpose());
      }
    }
    std::tie(t1, t2) = reconstruct_symmetric_pair(omega, lambdas, lhs);
    m.set_block(0, 0, t1);
    m.set_block(alpha, 0, t2);
  }

  if (trace) *trace = ReconstructTrace{v, u, t1, t2};
  return extract_symbols(MessageMatrix(params, std::move(m)));
}

}  // namespace gmsr
