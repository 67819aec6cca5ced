#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ringstore/algebra.hpp"
#include "ringstore/construct.hpp"
#include "ringstore/errors.hpp"
#include "ringstore/protocol.hpp"
#include "ringstore/scheme.hpp"
#include "ringstore/scheme_file.hpp"
#include "ringstore/simnet.hpp"

namespace py = pybind11;
using namespace ringstore;

namespace {

using Rows = std::vector<std::vector<Elem>>;

Rows to_rows(const Matrix& a) {
  Rows out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r);
    out[r].assign(row.begin(), row.end());
  }
  return out;
}

Matrix from_rows(const Rows& rows, std::uint32_t q) {
  return Matrix::from_rows(FieldSpec(q), rows);
}

py::list hops_to_list(const std::vector<LinkTransfer>& hops) {
  py::list out;
  for (const auto& hop : hops) {
    py::dict d;
    d["from"] = hop.from.label();
    d["to"] = hop.to.label();
    d["size"] = hop.size();
    d["vectors"] = to_rows(hop.payload.transpose());
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_ringstore, m) {
  m.doc() = "Storage schemes over unidirectional ring networks";

  static py::exception<Error> error(m, "RingstoreError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::reinterpret_borrow<py::object>(error.ptr());
      py::object instance = type(std::string(to_string(e.code())) + ": " + e.what());
      instance.attr("category") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  m.def("mat_rank", [](const Rows& rows, std::uint32_t q) {
    return mat_rank(from_rows(rows, q));
  });
  m.def("euclid_chain", [](std::size_t m0, std::size_t m1) {
    auto chain = euclid_chain(m0, m1);
    return py::make_tuple(chain.m, chain.p);
  });
  m.def("build_ed_matrix", [](std::size_t rows, std::size_t cols) {
    return to_rows(build_ed_matrix(rows, cols));
  });
  m.def("build_cauchy_mds", [](std::size_t rows, std::size_t cols, std::uint32_t q) {
    return to_rows(build_cauchy_mds(rows, cols, FieldSpec(q)));
  });
  m.def("greedy_mds_columns", [](std::size_t rows, std::size_t cols,
                                 std::uint32_t q, std::uint64_t seed) {
    return to_rows(greedy_mds_columns(rows, cols, FieldSpec(q), seed));
  });
  m.def("check_weak_column_mds", [](const Rows& rows, std::uint32_t q) {
    return check_weak_column_mds(from_rows(rows, q));
  });
  m.def("check_weak_row_mds", [](const Rows& rows, std::uint32_t q) {
    return check_weak_row_mds(from_rows(rows, q));
  });
  m.def("check_full_mds", [](const Rows& rows, std::uint32_t q) {
    return check_full_mds(from_rows(rows, q));
  });
  m.def("reconstruct_lower_bound", &reconstruct_lower_bound, py::arg("n"),
        py::arg("alpha"), py::arg("m"));
  m.def("cut_constraints", [](std::size_t n, std::size_t alpha, std::size_t mm) {
    py::list out;
    for (const auto& c : cut_constraints(n, alpha, mm)) {
      out.append(py::make_tuple(c.from.label(), c.to.label(), c.min_symbols));
    }
    return out;
  });

  py::class_<Scheme>(m, "Scheme")
      .def(py::init([](const Rows& rows, std::size_t n, std::size_t alpha,
                       std::uint32_t q) {
             return make_scheme(from_rows(rows, q), n, alpha);
           }),
           py::arg("matrix"), py::arg("n"), py::arg("alpha"), py::arg("q"))
      .def_static("parse", [](const std::string& text) { return scheme_parse(text); })
      .def("serialize", &scheme_serialize)
      .def_property_readonly("n", &Scheme::n)
      .def_property_readonly("alpha", &Scheme::alpha)
      .def_property_readonly("m", &Scheme::m)
      .def_property_readonly("q", [](const Scheme& s) { return s.field().p(); })
      .def_property_readonly("k", &Scheme::k)
      .def_property_readonly("gamma", &Scheme::gamma)
      .def_property_readonly("matrix", [](const Scheme& s) { return to_rows(s.g()); })
      .def("encode", [](const Scheme& s, const RowVector& x) {
        return encode(s, x).symbols;
      })
      .def("validate", [](const Scheme& s) {
        const auto r = validate_ordss(s);
        py::dict d;
        d["is_ordss"] = r.is_ordss;
        d["failed_window_condition_i"] = r.failed_window_condition_i;
        d["failed_window_condition_ii"] = r.failed_window_condition_ii;
        return d;
      })
      .def("__eq__", [](const Scheme& a, const Scheme& b) { return a == b; });

  py::class_<ReconstructionPlan>(m, "ReconstructionPlan")
      .def_readonly("user_node", &ReconstructionPlan::user_node)
      .def_readonly("bandwidth", &ReconstructionPlan::bandwidth)
      .def_readonly("basis_columns", &ReconstructionPlan::basis_columns)
      .def_property_readonly("hops", [](const ReconstructionPlan& p) {
        return hops_to_list(p.hops);
      });

  py::class_<RepairPlan>(m, "RepairPlan")
      .def_readonly("failed_node", &RepairPlan::failed_node)
      .def_readonly("bandwidth", &RepairPlan::bandwidth)
      .def_property_readonly("hops", [](const RepairPlan& p) { return hops_to_list(p.hops); });

  m.def("plan_reconstruction", &plan_reconstruction, py::arg("scheme"), py::arg("user"));
  m.def("plan_repair", &plan_repair, py::arg("scheme"), py::arg("node"));
  m.def("execute_reconstruction",
        [](const Scheme& s, const RowVector& x, const ReconstructionPlan& plan) {
          const auto r = execute_reconstruction(s, encode(s, x), plan);
          return py::make_tuple(r.data, r.bandwidth_used);
        },
        py::arg("scheme"), py::arg("data"), py::arg("plan"));
  m.def("execute_repair",
        [](const Scheme& s, const RowVector& x, const RepairPlan& plan) {
          const auto r = execute_repair(s, encode(s, x), plan);
          return py::make_tuple(r.symbols, r.bandwidth_used);
        },
        py::arg("scheme"), py::arg("data"), py::arg("plan"));

  py::class_<RingSim>(m, "RingSim")
      .def(py::init<Scheme, std::uint64_t>(), py::arg("scheme"), py::arg("seed"))
      .def_property_readonly("original_x", &RingSim::original_x)
      .def("user_read", [](RingSim& s, std::size_t u) { return s.user_read(u).bandwidth; })
      .def("fail", [](RingSim& s, std::size_t node) { s.fail(node); })
      .def("repair", [](RingSim& s) { return s.repair().bandwidth; })
      .def("fail_and_repair",
           [](RingSim& s, std::size_t node) { return s.fail_and_repair(node).bandwidth; })
      .def("event_log", [](const RingSim& s) {
        py::list out;
        for (const auto& ev : s.event_log()) {
          out.append(py::make_tuple(std::string(to_string(ev.kind)), ev.node_or_user,
                                    ev.bandwidth, ev.success));
        }
        return out;
      })
      .def("stats", [](const RingSim& s) {
        const auto st = s.stats();
        py::dict links, kinds;
        for (const auto& [link, count] : st.per_link) {
          links[py::str(link.from.label() + "->" + link.to.label())] = count;
        }
        for (const auto& [kind, total] : st.per_kind) {
          kinds[py::str(std::string(to_string(kind)))] = total;
        }
        py::dict d;
        d["per_link"] = links;
        d["per_kind"] = kinds;
        d["event_count"] = st.event_count;
        return d;
      });
}
