#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gmsr/codec.hpp"
#include "gmsr/error.hpp"
#include "gmsr/message_matrix.hpp"
#include "gmsr/params.hpp"
#include "gmsr/repair.hpp"
#include "gmsr/secure.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using Rows = std::vector<std::vector<gmsr::Symbol>>;

Rows to_rows(const gmsr::Matrix& m) {
  Rows out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row_span(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

gmsr::Matrix from_rows(const gmsr::CodeParams& p, const Rows& rows) {
  gmsr::Matrix m(p.field(), rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw gmsr::DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

py::list positions(const std::vector<gmsr::Position>& ps) {
  py::list out;
  for (const auto& p : ps) out.append(py::make_tuple(p.row, p.col, std::string(gmsr::to_string(p.block))));
  return out;
}

}  // namespace

PYBIND11_MODULE(_gmsr, m) {
  m.doc() = "Generalized product-matrix MSR regenerating codes over prime fields";

  py::register_exception<gmsr::ParamError>(m, "ParamError", PyExc_ValueError);
  py::register_exception<gmsr::DataError>(m, "DataError", PyExc_RuntimeError);

  py::class_<gmsr::CodeParams>(m, "CodeParams")
      .def_readonly("n", &gmsr::CodeParams::n)
      .def_readonly("k", &gmsr::CodeParams::k)
      .def_readonly("d", &gmsr::CodeParams::d)
      .def_readonly("q", &gmsr::CodeParams::q)
      .def_readonly("alpha", &gmsr::CodeParams::alpha)
      .def_readonly("B", &gmsr::CodeParams::B)
      .def_readonly("points", &gmsr::CodeParams::points)
      .def_property_readonly("type", [](const gmsr::CodeParams& p) {
        return std::string(gmsr::to_string(p.type));
      })
      .def("__repr__", [](const gmsr::CodeParams& p) {
        return "CodeParams(n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) +
               ", d=" + std::to_string(p.d) + ", q=" + std::to_string(p.q) + ")";
      });

  py::class_<gmsr::Share>(m, "Share")
      .def(py::init<>())
      .def(py::init([](std::uint32_t node, gmsr::Symbol x, std::vector<gmsr::Symbol> data) {
             return gmsr::Share{node, x, std::move(data)};
           }),
           "node"_a, "x"_a, "data"_a)
      .def_readwrite("node", &gmsr::Share::node)
      .def_readwrite("x", &gmsr::Share::x)
      .def_readwrite("data", &gmsr::Share::data)
      .def("__eq__", [](const gmsr::Share& a, const gmsr::Share& b) { return a == b; })
      .def("__repr__", [](const gmsr::Share& s) {
        return "Share(node=" + std::to_string(s.node) + ", x=" + std::to_string(s.x) + ")";
      });

  py::class_<gmsr::RepairPacket>(m, "RepairPacket")
      .def(py::init([](std::uint32_t helper, gmsr::Symbol value) {
             return gmsr::RepairPacket{helper, value};
           }),
           "helper"_a, "value"_a)
      .def_readwrite("helper", &gmsr::RepairPacket::helper)
      .def_readwrite("value", &gmsr::RepairPacket::value);

  py::class_<gmsr::SecureLayout>(m, "SecureLayout")
      .def_readonly("l", &gmsr::SecureLayout::l)
      .def_readonly("lp", &gmsr::SecureLayout::lp)
      .def_property_readonly("R", &gmsr::SecureLayout::R)
      .def_property_readonly("capacity", &gmsr::SecureLayout::capacity)
      .def_property_readonly("random_positions",
                             [](const gmsr::SecureLayout& l) { return positions(l.random_positions); })
      .def_property_readonly("message_positions",
                             [](const gmsr::SecureLayout& l) { return positions(l.message_positions); });

  m.def("derive_params", &gmsr::derive_params, "n"_a, "k"_a, "d"_a, "q"_a);
  m.def("select_points", &gmsr::select_points, "q"_a, "n"_a, "alpha"_a);
  m.def("feasibility_bound", &gmsr::feasibility_bound, "q"_a, "alpha"_a);
  m.def("free_positions", [](const gmsr::CodeParams& p) { return positions(gmsr::free_positions(p)); },
        "Free entries of M as 0-based (row, col, block) tuples.", "params"_a);

  m.def("build_message_matrix",
        [](const gmsr::CodeParams& p, const std::vector<gmsr::Symbol>& symbols) {
          return to_rows(gmsr::build_message_matrix(p, symbols).matrix());
        },
        "params"_a, "symbols"_a);
  m.def("extract_symbols",
        [](const gmsr::CodeParams& p, const Rows& rows) {
          return gmsr::extract_symbols(gmsr::MessageMatrix(p, from_rows(p, rows)));
        },
        "params"_a, "matrix"_a);

  m.def("encode",
        [](const gmsr::CodeParams& p, const std::vector<gmsr::Symbol>& symbols) {
          return gmsr::encode(gmsr::build_message_matrix(p, symbols));
        },
        "Encode B message symbols into n shares.", "params"_a, "symbols"_a);
  m.def("reconstruct",
        [](const gmsr::CodeParams& p, const std::vector<gmsr::Share>& shares) {
          return gmsr::reconstruct(p, shares);
        },
        "params"_a, "shares"_a);

  m.def("repair_vector", &gmsr::repair_vector, "params"_a, "failed_node"_a);
  m.def("helper_compute",
        [](const gmsr::CodeParams& p, const gmsr::Share& s, const std::vector<gmsr::Symbol>& phi) {
          return gmsr::helper_compute(p, s, phi);
        },
        "params"_a, "share"_a, "phi"_a);
  m.def("regenerate",
        [](const gmsr::CodeParams& p, std::uint32_t failed,
           const std::vector<gmsr::RepairPacket>& packets) {
          return gmsr::regenerate(p, failed, packets);
        },
        "params"_a, "failed_node"_a, "packets"_a);

  m.def("secure_layout", &gmsr::secure_layout, "params"_a, "l"_a, "lp"_a);
  m.def("secure_build",
        [](const gmsr::SecureLayout& layout, const std::vector<gmsr::Symbol>& randoms,
           const std::vector<gmsr::Symbol>& message) {
          return to_rows(gmsr::secure_build(layout, randoms, message).matrix());
        },
        "layout"_a, "random_symbols"_a, "message_symbols"_a);
  m.def("leakage_check",
        [](const gmsr::CodeParams& p, std::uint32_t l, std::uint32_t lp, bool pin_random) {
          gmsr::LeakageOptions opt;
          opt.pin_random = pin_random;
          auto r = gmsr::leakage_check(p, l, lp, opt);
          py::dict out;
          out["independent"] = r.independent;
          out["max_total_variation"] = py::make_tuple(r.tv_numerator, r.tv_denominator);
          out["configurations"] = r.configurations;
          out["messages"] = r.messages;
          out["all_pairs"] = r.all_pairs;
          return out;
        },
        "params"_a, "l"_a, "lp"_a, "pin_random"_a = false);
  m.def("embed_via_secure",
        [](const gmsr::CodeParams& p, const std::vector<gmsr::Symbol>& symbols) {
          return to_rows(gmsr::embed_via_secure(p, symbols));
        },
        "params"_a, "symbols"_a);
}
