#include "gmsr/message_matrix.hpp"

#include <string>

namespace gmsr {

namespace {

// Index of the U column / row inside W1 (a = k - 1).
std::size_t u_index(const CodeParams& p) { return p.k - 1; }

// Width of the V blocks: alpha - k, clamped to zero for Types I and II.
std::size_t v_width(const CodeParams& p) { return p.alpha > p.k ? p.alpha - p.k : 0; }

bool has_u(const CodeParams& p) { return p.type != MatrixType::I; }

}  // namespace

std::string_view to_string(Block b) {
  switch (b) {
    case Block::T1: return "T1";
    case Block::T2: return "T2";
    case Block::U1: return "U1";
    case Block::U2: return "U2";
    case Block::V1: return "V1";
    case Block::V2: return "V2";
    case Block::O1: return "O1";
    case Block::O2: return "O2";
  }
  return "?";
}

Block block_at(const CodeParams& p, std::size_t row, std::size_t col) {
  if (row >= p.d || col >= p.alpha) {
    throw IndexOutOfRange("entry (" + std::to_string(row) + ", " + std::to_string(col) +
                          ") outside the message matrix");
  }
  const std::size_t a = u_index(p);
  if (row >= p.alpha) return col < a ? Block::T2 : Block::O2;
  std::size_t r = std::min(row, col);
  std::size_t c = std::max(row, col);
  if (r < a) {
    if (c < a) return Block::T1;
    return c == a ? Block::U1 : Block::V1;
  }
  if (r == a) return c == a ? Block::U2 : Block::V2;
  return Block::O1;
}

std::vector<Position> free_positions(const CodeParams& p) {
  std::vector<Position> out;
  out.reserve(p.B);
  for (std::size_t r = 0; r < p.d; ++r) {
    for (std::size_t c = 0; c < p.alpha; ++c) {
      Block b = block_at(p, r, c);
      if (b == Block::O1 || b == Block::O2) continue;
      // W1 and T2 are symmetric: only the upper triangle is a first appearance.
      std::size_t local_r = r < p.alpha ? r : r - p.alpha;
      if (c < local_r) continue;
      out.push_back({r, c, b});
    }
  }
  return out;
}

MessageMatrix::MessageMatrix(CodeParams params, Matrix m)
    : params_(std::move(params)), m_(std::move(m)) {
  if (m_.rows() != params_.d || m_.cols() != params_.alpha) {
    throw MalformedMatrix("expected " + std::to_string(params_.d) + "x" +
                          std::to_string(params_.alpha) + " matrix");
  }
  if (m_.field().modulus() != params_.q) throw ModulusMismatch("matrix field differs from params");
  if (!w1().is_symmetric()) throw MalformedMatrix("W1 is not symmetric");
  if (!t2().is_symmetric()) throw MalformedMatrix("T2 is not symmetric");
  if (!o1().is_zero()) throw MalformedMatrix("O1 has nonzero entries");
  if (!o2().is_zero()) throw MalformedMatrix("O2 has nonzero entries");
}

Matrix MessageMatrix::t1() const {
  std::size_t a = u_index(params_);
  return m_.block(0, 0, a, a);
}

Matrix MessageMatrix::t2() const {
  std::size_t a = u_index(params_);
  return m_.block(params_.alpha, 0, a, a);
}

Matrix MessageMatrix::u1() const {
  std::size_t a = u_index(params_);
  return has_u(params_) ? m_.block(0, a, a, 1) : Matrix(m_.field(), a, 0);
}

Matrix MessageMatrix::u2() const {
  std::size_t a = u_index(params_);
  return has_u(params_) ? m_.block(a, a, 1, 1) : Matrix(m_.field(), 0, 0);
}

Matrix MessageMatrix::v1() const {
  std::size_t a = u_index(params_);
  std::size_t w = v_width(params_);
  if (w == 0) return Matrix(m_.field(), a, 0);
  return m_.block(0, a + 1, a, w);
}

Matrix MessageMatrix::v2() const {
  std::size_t a = u_index(params_);
  std::size_t w = v_width(params_);
  if (!has_u(params_)) return Matrix(m_.field(), 0, 0);
  if (w == 0) return Matrix(m_.field(), 1, 0);
  return m_.block(a, a + 1, 1, w);
}

Matrix MessageMatrix::o1() const {
  std::size_t a = u_index(params_);
  std::size_t w = v_width(params_);
  if (w == 0) return Matrix(m_.field(), 0, 0);
  return m_.block(a + 1, a + 1, w, w);
}

Matrix MessageMatrix::o2() const {
  std::size_t a = u_index(params_);
  return m_.block(params_.alpha, a, a, params_.alpha - a);
}

Matrix MessageMatrix::w1() const { return m_.block(0, 0, params_.alpha, params_.alpha); }

Matrix MessageMatrix::w2() const {
  return m_.block(params_.alpha, 0, params_.d - params_.alpha, params_.alpha);
}

MessageMatrix build_message_matrix(const CodeParams& params, std::span<const Symbol> symbols) {
  if (symbols.size() != params.B) {
    throw LengthMismatch("expected " + std::to_string(params.B) + " message symbols, got " +
                         std::to_string(symbols.size()));
  }
  const Field f = params.field();
  Matrix m(f, params.d, params.alpha);
  auto positions = free_positions(params);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const auto [r, c, block] = positions[i];
    if (!f.contains(symbols[i])) {
      throw SymbolOutOfRange("symbol " + std::to_string(symbols[i]) + " not in GF(" +
                             std::to_string(params.q) + ")");
    }
    m(r, c) = symbols[i];
    if (r < params.alpha) {
      m(c, r) = symbols[i];
    } else {
      // T2 mirror, local coordinates (r - alpha, c).
      m(params.alpha + c, r - params.alpha) = symbols[i];
    }
  }
  return MessageMatrix(params, std::move(m));
}

std::vector<Symbol> extract_symbols(const MessageMatrix& mm) {
  std::vector<Symbol> out;
  for (const auto& pos : free_positions(mm.params())) out.push_back(mm.matrix()(pos.row, pos.col));
  return out;
}

}  // namespace gmsr
