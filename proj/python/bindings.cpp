#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "letgrid/chain_circuit.hpp"
#include "letgrid/gridding.hpp"
#include "letgrid/letters.hpp"
#include "letgrid/loh.hpp"
#include "letgrid/partition.hpp"
#include "letgrid/permutation.hpp"

namespace py = pybind11;
using namespace letgrid;

namespace {

Budget to_budget(std::optional<std::uint64_t> steps) { return steps ? Budget::steps(*steps) : Budget{}; }

Permutation to_perm(const std::vector<int>& v) { return Permutation(v); }

py::dict representation(const LetterRepresentation& r) {
  py::dict d;
  d["decoder"] = r.decoder;
  d["word"] = r.word;
  d["vertices"] = r.vertices;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Letter graphs, grid classes, chain circuits and locally ordered hypergraphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>())
      .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::order)
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("add_edge", &Graph::add_edge)
      .def("__eq__", &Graph::operator==)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph", &parse_graph);
  m.def("format_graph", &format_graph);
  m.def("generate", [](const std::string& family, int n) {
    auto f = family_from_name(family);
    if (!f) throw InputError("unknown graph family " + family);
    return generate(*f, n);
  });
  m.def("complement", &complement);
  m.def("induced_subgraph", &induced_subgraph);
  m.def("is_isomorphic", &is_isomorphic);
  m.def("contains_induced", [](const Graph& h, const Graph& p) { return contains_induced(h, p); });
  m.def("cochromatic_number", &cochromatic_number);

  py::class_<Decoder>(m, "Decoder")
      .def(py::init<std::vector<std::string>>())
      .def(py::init<std::vector<std::string>, const std::vector<std::pair<std::string, std::string>>&>(), py::arg("letters"),
           py::arg("arcs"))
      .def_property_readonly("letters", &Decoder::letters)
      .def("arcs", &Decoder::arcs)
      .def("has_arc", py::overload_cast<std::string_view, std::string_view>(&Decoder::has_arc, py::const_));

  m.def("parse_decoder", &parse_decoder);
  m.def("format_decoder", &format_decoder);
  m.def("decode", [](const Decoder& d, const Word& w) { return decode(d, w); });
  m.def("parse_word", &parse_word);
  m.def(
      "recognize",
      [](const Decoder& d, const Graph& g, std::optional<std::uint64_t> budget) -> py::object {
        auto r = recognize_with_vertices(d, g, to_budget(budget));
        if (!r) return py::none();
        return representation(*r);
      },
      py::arg("decoder"), py::arg("graph"), py::arg("budget") = py::none());
  m.def(
      "lettericity",
      [](const Graph& g, std::optional<std::uint64_t> budget) {
        auto r = lettericity(g, to_budget(budget));
        py::dict d;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["exact"] = r.exact;
        d["witness"] = r.witness ? py::object(representation(*r.witness)) : py::none();
        return d;
      },
      py::arg("graph"), py::arg("budget") = py::none());
  m.def("minimal_obstructions", &minimal_obstructions);

  m.def("inversion_graph", [](const std::vector<int>& p) { return inversion_graph(to_perm(p)); });
  m.def("contains_pattern", [](const std::vector<int>& p, const std::vector<int>& s) { return contains_pattern(to_perm(p), to_perm(s)); });
  m.def("pi_n", [](int n) { return pi_n(n).values(); });
  m.def("sum", [](const std::vector<int>& p, const std::vector<int>& s, bool skew) {
    return sum(to_perm(p), to_perm(s), skew ? SumMode::skew : SumMode::direct).values();
  }, py::arg("pi"), py::arg("sigma"), py::arg("skew") = false);

  py::class_<GridMatrix>(m, "GridMatrix")
      .def_property_readonly("columns", &GridMatrix::columns)
      .def_property_readonly("rows", &GridMatrix::rows)
      .def("at", &GridMatrix::at);
  m.def("parse_matrix", &parse_matrix);
  m.def("cell_graph", &cell_graph);
  m.def("monotone_gridding", [](const std::vector<int>& p, const GridMatrix& mat) -> py::object {
    auto g = monotone_gridding(to_perm(p), mat);
    if (!g) return py::none();
    py::dict d;
    d["vertical"] = g->vertical;
    d["horizontal"] = g->horizontal;
    d["cells"] = g->assignment;
    return d;
  });
  m.def("geometric_gridding", [](const std::vector<int>& p, const GridMatrix& mat) -> py::object {
    auto g = geometric_gridding(to_perm(p), mat);
    if (!g) return py::none();
    return py::str(format_cell_word(g->matrix, g->word));
  });
  m.def("phi", [](const GridMatrix& mat, const std::string& word) {
    auto s = find_pmm_signs(mat);
    if (!s) throw InputError("phi needs a partial multiplication matrix");
    return phi(mat, *s, parse_cell_word(mat, word)).values();
  });

  py::class_<ChainCircuit>(m, "ChainCircuit")
      .def_property_readonly("graph", &ChainCircuit::graph)
      .def_property_readonly("bags", [](const ChainCircuit& c) { return c.bags(); })
      .def_property_readonly("k", &ChainCircuit::k);
  m.def("generate_ckl", &generate_ckl);
  m.def("parse_circuit", &parse_circuit);
  m.def("cc_complement", &cc_complement);
  m.def("encode", [](const ChainCircuit& cc) {
    Encoding e = encode(cc);
    py::dict d;
    d["decoder"] = e.decoder;
    d["word"] = e.word;
    d["vertices"] = e.vertices;
    d["letters_used"] = e.letters_used;
    return d;
  });

  m.def("gamma", [](const Graph& g) { return gamma(g); });
  m.def("sigma", [](const Graph& g) { return sigma(g); });
  m.def("lambda_", [](const Graph& g) { return lambda(g); });
  m.def("linked_chain", [](const std::vector<int>& p) { return linked_chain(to_perm(p)).graph; });

  py::class_<Loh>(m, "Loh")
      .def_property_readonly("elements", &Loh::elements)
      .def("__str__", &format_loh);
  m.def("parse_loh", &parse_loh);
  m.def("from_chain_circuit", &from_chain_circuit);
  m.def("global_inconsistency", [](const Loh& h) { return global_inconsistency(h).value; });
}
