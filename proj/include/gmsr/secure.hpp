#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gmsr/codec.hpp"
#include "gmsr/message_matrix.hpp"
#include "gmsr/params.hpp"

namespace gmsr {

/// Which rule put a position into the random set.
enum class RandomGroup {
  W1Rows,    // first l rows of W1
  T2Corner,  // first (l-1) rows and columns of T2
  T2Rows,    // remaining entries of the first l' rows of T2
};

/// Split of free_positions() into entries replaced by uniform random symbols
/// and entries that carry the message, for an eavesdropper that reads l
/// nodes and the repair downloads of l' of them.
struct SecureLayout {
  CodeParams params;
  std::uint32_t l = 0;
  std::uint32_t lp = 0;
  std::vector<Position> random_positions;    // in free_positions() order
  std::vector<RandomGroup> random_groups;    // parallel to random_positions
  std::vector<Position> message_positions;   // in free_positions() order

  std::size_t R() const noexcept { return random_positions.size(); }
  std::size_t capacity() const noexcept { return message_positions.size(); }
  std::size_t group_size(RandomGroup g) const;
};

/// R = l*alpha + (k-l)*l'. Types I-III only.
SecureLayout secure_layout(const CodeParams& params, std::uint32_t l, std::uint32_t lp);

MessageMatrix secure_build(const SecureLayout& layout, std::span<const Symbol> random_symbols,
                           std::span<const Symbol> message_symbols);

/// Splits extract_symbols() output back into (random, message) lists.
std::pair<std::vector<Symbol>, std::vector<Symbol>> secure_extract(const SecureLayout& layout,
                                                                   const MessageMatrix& mm);

struct ViewOptions {
  /// When set, |storage| <= l and |repair| <= l' are enforced.
  bool check_budget = false;
  std::uint32_t l = 0;
  std::uint32_t lp = 0;
  /// Number of distinct helper sets observed per repaired node. Instance t
  /// uses the d survivors starting at the t-th survivor (cyclically).
  std::uint32_t repair_instances = 1;
};

/// Symbols seen by an eavesdropper: for every node in storage_nodes
/// (ascending), either its share or, when it is also in repair_nodes, the
/// d repair packets it downloaded. The download already determines the
/// stored share, so the share itself is not repeated.
std::vector<Symbol> eavesdropper_view(const MessageMatrix& mm,
                                      std::span<const std::uint32_t> storage_nodes,
                                      std::span<const std::uint32_t> repair_nodes,
                                      const ViewOptions& options = {});

struct LeakageOptions {
  /// Replace every random symbol by zero (no secrecy expected).
  bool pin_random = false;
  std::uint32_t repair_instances = 1;
  /// Refuses to enumerate more than this many symbol assignments.
  std::uint64_t max_enumeration = 10'000'000;
};

struct LeakageReport {
  bool independent = true;
  // Worst total-variation distance as an exact fraction.
  std::uint64_t tv_numerator = 0;
  std::uint64_t tv_denominator = 1;
  std::uint64_t configurations = 0;
  std::uint64_t messages = 0;
  // False when too many messages to compare every pair; the distance is
  // then taken against the all-zero message only.
  bool all_pairs = true;
};

/// Exhaustively checks that the eavesdropper view distribution does not
/// depend on the message, over every storage set of size l and every repair
/// subset of size l' within it.
LeakageReport leakage_check(const CodeParams& params, std::uint32_t l, std::uint32_t lp,
                            const LeakageOptions& options = {});

/// The 2 alpha x alpha matrix [S1; S2] of the (alpha+1, 2 alpha) product-matrix
/// MSR code with the B symbols placed as an {l = k, l' = 0} secure layout and
/// every other entry zero.
Matrix embed_via_secure(const CodeParams& params, std::span<const Symbol> symbols);

}  // namespace gmsr
