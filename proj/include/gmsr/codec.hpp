#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gmsr/matrix.hpp"
#include "gmsr/message_matrix.hpp"
#include "gmsr/params.hpp"

namespace gmsr {

/// The alpha symbols stored on one node.
struct Share {
  std::uint32_t node = 0;  // 1-based
  Symbol x = 0;
  std::vector<Symbol> data;

  friend bool operator==(const Share&, const Share&) = default;
};

/// rho = [1, x, ..., x^(d-1)] split into the pieces the decoder works with:
/// omega = [1, ..., x^(k-2)] and theta = [1, ..., x^(alpha-k-1)].
struct CodingVector {
  std::vector<Symbol> rho;
  std::vector<Symbol> omega;
  std::vector<Symbol> theta;
};

CodingVector coding_vector(const CodeParams& params, std::uint32_t node);

/// c_i = rho_i M for every node.
std::vector<Share> encode(const MessageMatrix& mm);
Share encode_share(const MessageMatrix& mm, std::uint32_t node);

/// Intermediate blocks recovered while decoding; blocks that the matrix type
/// does not have are left empty.
struct ReconstructTrace {
  Matrix v;   // [V1; V2], k x (alpha - k)
  Matrix u;   // [U1; U2], k x 1
  Matrix t1;  // (k-1) x (k-1)
  Matrix t2;  // (k-1) x (k-1)
};

/// Recovers the B message symbols from exactly k shares with distinct nodes.
std::vector<Symbol> reconstruct(const CodeParams& params, std::span<const Share> shares,
                                ReconstructTrace* trace = nullptr);

/// Recovers symmetric T1, T2 from rhs = Omega T1 + Lambda Omega T2.
///
/// omega is k x (k-1) (row i is omega_i), lambdas holds the k diagonal
/// entries of Lambda and must be pairwise distinct.
///
/// With P = rhs Omega^t, each off-diagonal pair (P_ij, P_ji) gives
///   P_ij = A_ij + lambda_i B_ij,  P_ji = A_ij + lambda_j B_ij
/// for A = Omega T1 Omega^t and B = Omega T2 Omega^t. Row i of Omega T1 is
/// then pinned down by the k-1 values A_ij (j != i) against the Vandermonde
/// rows omega_j, and T1 follows from the first k-1 such rows. Same for T2.
std::pair<Matrix, Matrix> reconstruct_symmetric_pair(const Matrix& omega,
                                                     std::span<const Symbol> lambdas,
                                                     const Matrix& rhs);

}  // namespace gmsr
