#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gmsr/codec.hpp"
#include "gmsr/params.hpp"

namespace gmsr {

/// One symbol sent by a helper toward the repair of a failed node.
struct RepairPacket {
  std::uint32_t helper = 0;
  Symbol value = 0;

  friend bool operator==(const RepairPacket&, const RepairPacket&) = default;
};

/// The vector phi_f helpers project their share onto:
///   I: omega_f   II: [omega_f, x^(k-1)]   III: [omega_f, x^(k-1), x^k theta_f]
///   IV: [1]      V: rho_f
/// In every case phi_f is the first alpha entries of rho_f.
std::vector<Symbol> repair_vector(const CodeParams& params, std::uint32_t failed_node);

RepairPacket helper_compute(const CodeParams& params, const Share& share,
                            std::span<const Symbol> phi);

/// Default helper policy: the d lowest-indexed nodes other than failed_node.
std::vector<std::uint32_t> default_helpers(const CodeParams& params, std::uint32_t failed_node);

/// Rebuilds the share of failed_node from d packets with distinct helpers.
/// If intermediate is non-null it receives M phi_f^t = [W1 phi^t; W2 phi^t].
Share regenerate(const CodeParams& params, std::uint32_t failed_node,
                 std::span<const RepairPacket> packets,
                 std::vector<Symbol>* intermediate = nullptr);

}  // namespace gmsr
