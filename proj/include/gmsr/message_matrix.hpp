#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "gmsr/matrix.hpp"
#include "gmsr/params.hpp"

namespace gmsr {

enum class Block { T1, T2, U1, U2, V1, V2, O1, O2 };

std::string_view to_string(Block b);

/// A free (message-carrying) entry of M, 0-based.
struct Position {
  std::size_t row;
  std::size_t col;
  Block block;

  friend bool operator==(const Position&, const Position&) = default;
};

/// The B first-appearance positions of M in row-major order. Mirror entries
/// of symmetric blocks and structural zeros are skipped.
std::vector<Position> free_positions(const CodeParams& params);

/// Owning block of any entry of the d x alpha message matrix. Entries below
/// the diagonal of W1 report the block of their mirror.
Block block_at(const CodeParams& params, std::size_t row, std::size_t col);

/// The d x alpha message matrix M.
///
/// Rows [0, alpha) form the symmetric W1; rows [alpha, d) form W2 = [T2 O2].
/// With a = k-1, W1 splits as
///
///   [ T1    U1    V1 ]   rows [0, a)
///   [ U1^t  U2    V2 ]   row a
///   [ V1^t  V2^t  O1 ]   rows (a, alpha)
///
/// where any block may be empty (Type I has no U/V/O1 at all).
class MessageMatrix {
 public:
  /// Validates structure; throws MalformedMatrix on asymmetry or nonzero
  /// structural zeros.
  MessageMatrix(CodeParams params, Matrix m);

  const CodeParams& params() const noexcept { return params_; }
  const Matrix& matrix() const noexcept { return m_; }

  Matrix t1() const;
  Matrix t2() const;
  Matrix u1() const;
  Matrix u2() const;
  Matrix v1() const;
  Matrix v2() const;
  Matrix o1() const;
  Matrix o2() const;
  Matrix w1() const;
  Matrix w2() const;

 private:
  CodeParams params_;
  Matrix m_;
};

/// Places symbols at free_positions() in order and fills symmetric mirrors.
MessageMatrix build_message_matrix(const CodeParams& params, std::span<const Symbol> symbols);

/// Inverse of build_message_matrix.
std::vector<Symbol> extract_symbols(const MessageMatrix& mm);

}  // namespace gmsr
