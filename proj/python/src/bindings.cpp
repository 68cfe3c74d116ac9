#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphjac/corpus.hpp"
#include "graphjac/dlp.hpp"
#include "graphjac/graph.hpp"
#include "graphjac/jacobian.hpp"
#include "graphjac/linalg.hpp"
#include "graphjac/oracle.hpp"
#include "graphjac/pairing.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through hex text, so sizes are unbounded.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyIndex_Check(src.ptr())) return false;
    object idx = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
    if (!idx) {
      PyErr_Clear();
      return false;
    }
    object text = reinterpret_steal<object>(PyNumber_ToBase(idx.ptr(), 16));
    if (!text) {
      PyErr_Clear();
      return false;
    }
    return value.set_str(text.cast<std::string>(), 0) == 0;
  }

  static handle cast(const mpz_class& x, return_value_policy, handle) {
    return PyLong_FromString(x.get_str(16).c_str(), nullptr, 16);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace graphjac;
using Rows = std::vector<std::vector<Integer>>;

Divisor to_divisor(const MultiGraph& g, const IntVector& v) {
  if (v.size() != g.vertex_count())
    throw Error(ErrorCode::DimensionMismatch,
                "divisor has " + std::to_string(v.size()) +
                    " entries, graph has " + std::to_string(g.vertex_count()) +
                    " vertices");
  return Divisor(v);
}

Rows to_rows(const IntegerMatrix& m) {
  Rows out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

IntegerMatrix from_rows(const Rows& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

py::object fraction(const PairingValue& v) {
  return py::module_::import("fractions").attr("Fraction")(Integer(v.numerator()), Integer(v.denominator()));
}

GeneralizedInverse inverse_for(const MultiGraph& g, const std::string& spec) {
  if (spec == "mp") return moore_penrose(g);
  if (spec.rfind("minor:", 0) == 0 && spec.size() > 6 &&
      spec.find_first_not_of("0123456789", 6) == std::string::npos)
    return gen_inverse_minor(g, std::stoul(spec.substr(6)));
  throw Error(ErrorCode::ParseError, "inverse must be 'minor:<i>' or 'mp'");
}

py::object solution(const std::optional<DlpSolution>& s) {
  if (!s) return py::none();
  return py::make_tuple(s->x, s->modulus);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Jacobians of multigraphs, the monodromy pairing and the DLP";

  py::register_exception<Error>(m, "GraphjacError", PyExc_ValueError);

  py::class_<MultiGraph>(m, "Graph")
      .def(py::init([](std::size_t n,
                       const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return build_graph(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_static("parse", &parse_graph, py::arg("text"))
      .def_static("from_file", &read_graph_file, py::arg("path"))
      .def_property_readonly("n", &MultiGraph::vertex_count)
      .def_property_readonly("m", &MultiGraph::edge_count)
      .def("degree", &MultiGraph::degree)
      .def("multiplicity", &MultiGraph::multiplicity)
      .def("laplacian", [](const MultiGraph& g) { return to_rows(laplacian(g)); })
      .def("to_text", &format_graph)
      .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
      .def("__repr__", [](const MultiGraph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  auto fam = m.def_submodule("families", "Standard graph families");
  fam.def("cycle", &families::cycle);
  fam.def("complete", &families::complete);
  fam.def("banana", &families::banana);
  fam.def("wheel", &families::wheel);
  fam.def("wheel_minus_spoke", &families::wheel_minus_spoke);
  fam.def("path", &families::path);

  m.def("determinant", [](const Rows& a) { return determinant(from_rows(a)); });
  m.def("smith_normal_form", [](const Rows& a) {
    const SmithDecomposition s = smith_normal_form(from_rows(a));
    return py::make_tuple(to_rows(s.U), to_rows(s.D), to_rows(s.V));
  }, "(U, D, V) with U A V = D");

  m.def("degree", [](const IntVector& d) { return degree(Divisor(d)); });
  m.def("div_of_function", [](const MultiGraph& g, const IntVector& f) {
    return div_of_function(g, VertexFunction(f)).values();
  });
  m.def("is_principal", [](const MultiGraph& g, const IntVector& d)
            -> std::optional<IntVector> {
    auto f = is_principal(g, to_divisor(g, d));
    if (!f) return std::nullopt;
    return f->values();
  }, "f with div(f) == d, or None");
  m.def("dhar_reduce", [](const MultiGraph& g, const IntVector& d, Vertex q) {
    return dhar_reduce(g, to_divisor(g, d), q).values();
  }, py::arg("g"), py::arg("d"), py::arg("q") = 0);
  m.def("equivalent", [](const MultiGraph& g, const IntVector& a,
                         const IntVector& b) {
    return equivalent(g, to_divisor(g, a), to_divisor(g, b));
  });
  m.def("spanning_tree_count", &spanning_tree_count);
  m.def("monodromy_pairing",
        [](const MultiGraph& g, const IntVector& a, const IntVector& b,
           const std::string& inverse) {
          const GeneralizedInverse l = inverse_for(
              g, inverse.empty() ? "minor:" + std::to_string(g.vertex_count() - 1)
                                 : inverse);
          return fraction(
              monodromy_pairing(to_divisor(g, a), to_divisor(g, b), l));
        },
        py::arg("g"), py::arg("d1"), py::arg("d2"), py::arg("inverse") = "");
  m.def("pairing_by_definition", [](const MultiGraph& g, const IntVector& a,
                                    const IntVector& b) {
    return fraction(pairing_by_definition(g, to_divisor(g, a), to_divisor(g, b)));
  });

  py::class_<JacobianStructure>(m, "Jacobian")
      .def_property_readonly("graph", &JacobianStructure::graph)
      .def_property_readonly("invariant_factors",
                             &JacobianStructure::invariant_factors)
      .def_property_readonly("generators",
                             [](const JacobianStructure& s) {
                               std::vector<IntVector> out;
                               for (const auto& d : s.generators())
                                 out.push_back(d.values());
                               return out;
                             })
      .def_property_readonly("order", &JacobianStructure::group_order)
      .def_property_readonly("is_cyclic", &JacobianStructure::is_cyclic)
      .def("reduce", [](const JacobianStructure& s, const IntVector& d) {
        return s.reduce(to_divisor(s.graph(), d)).values();
      })
      .def("equivalent", [](const JacobianStructure& s, const IntVector& a,
                            const IntVector& b) {
        return s.equivalent(to_divisor(s.graph(), a), to_divisor(s.graph(), b));
      })
      .def("pair", [](const JacobianStructure& s, const IntVector& a,
                      const IntVector& b) {
        return fraction(s.pair(to_divisor(s.graph(), a), to_divisor(s.graph(), b)));
      })
      .def("element_order", [](const JacobianStructure& s, const IntVector& d) {
        return element_order(s, to_divisor(s.graph(), d));
      })
      .def("order_general", [](const JacobianStructure& s, const IntVector& d) {
        return order_general(s, to_divisor(s.graph(), d));
      })
      .def("dlp",
           [](const JacobianStructure& s, const IntVector& base,
              const IntVector& target, bool general) {
             const DlpInstance inst{s, to_divisor(s.graph(), base),
                                    to_divisor(s.graph(), target)};
             return solution(general || !s.is_cyclic() ? dlp_general(inst)
                                                       : dlp_cyclic(inst));
           },
           py::arg("base"), py::arg("target"), py::arg("general") = false,
           "(x, modulus) with x * base ~ target, or None")
      .def("verify",
           [](const JacobianStructure& s, const IntVector& base,
              const IntVector& target, const Integer& x, const Integer& mod) {
             return verify_solution({s, to_divisor(s.graph(), base),
                                     to_divisor(s.graph(), target)},
                                    {x, mod});
           });

  m.def("analyze", [](const MultiGraph& g) {
    return std::make_unique<JacobianStructure>(analyze(g));
  });

  m.def("enumerate_group", [](const MultiGraph& g, std::uint64_t bound) {
    const oracle::GroupTable table = oracle::enumerate_group(g, bound);
    std::vector<IntVector> out;
    for (const auto& d : table.elements())
      out.push_back(d.values());
    return out;
  }, py::arg("g"), py::arg("bound") = 2000);
  m.def("brute_force_dlp", [](const MultiGraph& g, const IntVector& d,
                              const IntVector& t) {
    return oracle::brute_force_dlp(oracle::enumerate_group(g),
                                   to_divisor(g, d), to_divisor(g, t));
  });
  m.def("spanning_trees_by_enumeration", [](const MultiGraph& g) {
    return oracle::spanning_trees_by_enumeration(g);
  });

  m.def("generate_instance", [](const std::string& family, std::size_t size,
                                std::uint64_t seed) {
    const GeneratedInstance gi = generate_instance(parse_family(family), size, seed);
    py::dict out;
    out["graph"] = gi.graph;
    out["base"] = gi.base.values();
    out["target"] = gi.target.values();
    out["secret"] = gi.secret;
    return out;
  }, py::arg("family"), py::arg("size"), py::arg("seed") = 1);
}
