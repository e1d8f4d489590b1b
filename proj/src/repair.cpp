#include "gmsr/repair.hpp"

#include <set>
#include <string>

namespace gmsr {

std::vector<Symbol> repair_vector(const CodeParams& params, std::uint32_t failed_node) {
  std::vector<Symbol> rho = coding_vector(params, failed_node).rho;
  rho.resize(params.alpha);
  return rho;
}

RepairPacket helper_compute(const CodeParams& params, const Share& share,
                            std::span<const Symbol> phi) {
  if (share.data.size() != phi.size()) {
    throw LengthMismatch("share has " + std::to_string(share.data.size()) +
                         " symbols but repair vector has " + std::to_string(phi.size()));
  }
  return RepairPacket{share.node, dot(params.field(), share.data, phi)};
}

std::vector<std::uint32_t> default_helpers(const CodeParams& params, std::uint32_t failed_node) {
  params.check_node(failed_node);
  std::vector<std::uint32_t> out;
  for (std::uint32_t h = 1; h <= params.n && out.size() < params.d; ++h) {
    if (h != failed_node) out.push_back(h);
  }
  return out;
}

Share regenerate(const CodeParams& params, std::uint32_t failed_node,
                 std::span<const RepairPacket> packets, std::vector<Symbol>* intermediate) {
  params.check_node(failed_node);
  if (packets.size() != params.d) {
    throw LengthMismatch("repair needs exactly d = " + std::to_string(params.d) +
                         " packets, got " + std::to_string(packets.size()));
  }
  std::set<std::uint32_t> seen;
  std::vector<Symbol> helper_points;
  std::vector<Symbol> values;
  for (const auto& pk : packets) {
    params.check_node(pk.helper);
    if (pk.helper == failed_node) {
      throw DuplicateNode("node " + std::to_string(failed_node) + " cannot help itself");
    }
    if (!seen.insert(pk.helper).second) {
      throw DuplicateNode("helper " + std::to_string(pk.helper) + " supplied twice");
    }
    if (pk.value >= params.q) throw SymbolOutOfRange("packet value " + std::to_string(pk.value));
    helper_points.push_back(params.point(pk.helper));
    values.push_back(pk.value);
  }

  const Field f = params.field();
  const Matrix rho_helpers = Matrix::vandermonde(f, helper_points, params.d);
  const Matrix mphi = mat_solve(rho_helpers, Matrix::column(f, values));
  if (intermediate) intermediate->assign(mphi.data().begin(), mphi.data().end());

  // c_f = (W1 phi^t)^t + x_f^alpha [(W2 phi^t)^t, 0]. W2 has k-1 rows, which
  // is zero for Types IV and V where M itself is symmetric and M phi^t = c_f^t.
  const Symbol x = params.point(failed_node);
  const Symbol xa = f.pow(x, params.alpha);
  Share out{failed_node, x, std::vector<Symbol>(params.alpha)};
  for (std::size_t c = 0; c < params.alpha; ++c) out.data[c] = mphi(c, 0);
  for (std::size_t c = 0; c + params.alpha < params.d; ++c) {
    out.data[c] = f.add(out.data[c], f.mul(xa, mphi(params.alpha + c, 0)));
  }
  return out;
}

}  // namespace gmsr
