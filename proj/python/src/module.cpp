#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bracekit/constructions.hpp"
#include "bracekit/cuts.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/factors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/isomorphism.hpp"
#include "bracekit/matching.hpp"
#include "bracekit/pfaffian.hpp"
#include "bracekit/scan.hpp"
#include "bracekit/suite.hpp"

namespace py = pybind11;
using namespace bracekit;

namespace {

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back(make_edge(u, v));
  return Graph(n, edges);
}

std::vector<std::pair<int, int>> pairs_of(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

Graph source(const py::object& o) {
  if (py::isinstance<Graph>(o)) return o.cast<Graph>();
  const auto text = o.cast<std::string>();
  try {
    return fixture(text);
  } catch (const UnknownFixture&) {
    return graph6_decode(text);
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matching structure of cubic bipartite graphs";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<NotMatchingCovered>(m, "NotMatchingCovered", precondition.ptr());
  py::register_exception<TooSmall>(m, "TooSmall", precondition.ptr());
  py::register_exception<UnknownFixture>(m, "UnknownFixture", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&from_pairs), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", [](const Graph& g) { return pairs_of(g.edges()); })
      .def("neighbours", [](const Graph& g, Vertex v) {
        if (v < 0 || v >= g.order()) throw py::index_error("vertex out of range");
        const auto s = g.neighbours(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("degree", &Graph::degree)
      .def("is_cubic", &Graph::is_cubic)
      .def("graph6", [](const Graph& g) { return graph6_encode(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + " " + graph6_encode(g) + ">";
      });

  m.def("from_graph6", &graph6_decode, py::arg("text"));
  m.def("to_graph6", &graph6_encode, py::arg("graph"));
  m.def("fixture", [](const std::string& name) { return fixture(name); }, py::arg("name"));
  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (FixtureId id : all_fixtures()) out.emplace_back(fixture_name(id));
    return out;
  });

  m.def("is_bipartite", [](const py::object& g) { return is_bipartite(source(g)); });
  m.def("is_connected", [](const py::object& g) { return is_connected(source(g)); });
  m.def("girth", [](const py::object& g) { return girth(source(g)); });
  m.def("bridges", [](const py::object& g) { return pairs_of(bridges(source(g))); });
  m.def("are_isomorphic", [](const py::object& a, const py::object& b) { return are_isomorphic(source(a), source(b)); });

  m.def("count_perfect_matchings",
        [](const py::object& g, std::uint64_t budget) { return count_perfect_matchings(source(g), budget); },
        py::arg("graph"), py::arg("budget") = Budgets{}.matchings);
  m.def("perfect_matchings", [](const py::object& g, std::uint64_t budget) {
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& pm : enumerate_perfect_matchings(source(g), budget)) out.push_back(pairs_of(pm.edges));
    return out;
  }, py::arg("graph"), py::arg("budget") = Budgets{}.matchings);
  m.def("is_matching_covered", [](const py::object& g) { return is_matching_covered(source(g)); });
  m.def("is_k_extendable", [](const py::object& g, int k) { return is_k_extendable(source(g), k); });
  m.def("is_brace", [](const py::object& g) { return is_brace(source(g)); });

  m.def("is_two_factor_hamiltonian", [](const py::object& g, std::uint64_t budget) {
    const auto v = is_two_factor_hamiltonian(source(g), budget);
    py::dict d;
    d["two_factor_hamiltonian"] = v.two_factor_hamiltonian;
    d["has_two_factor"] = v.has_two_factor;
    d["witness"] = v.witness ? py::cast(v.witness->cycles) : py::none();
    d["factors_examined"] = v.factors_examined;
    return d;
  }, py::arg("graph"), py::arg("budget") = Budgets{}.two_factors);

  m.def("is_pfaffian", [](const py::object& g) { return is_pfaffian(source(g)); });
  m.def("pfaffian_orientation", [](const py::object& obj) -> py::object {
    const Graph g = source(obj);
    const auto o = find_pfaffian_orientation(g);
    if (!o) return py::none();
    std::vector<std::pair<int, int>> arcs;
    for (int e = 0; e < g.size(); ++e) arcs.emplace_back(o->tail(g, e), o->head(g, e));
    return py::cast(arcs);
  });
  m.def("nice_cycles", [](const py::object& g) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& c : nice_cycles(source(g))) out.push_back(c.cycle);
    return out;
  });

  m.def("decompose", [](const py::object& g, bool descending) {
    const auto r = decompose(source(g), {}, descending ? CutSearchOrder::kDescending : CutSearchOrder::kAscending);
    std::vector<std::pair<std::string, Graph>> out;
    for (const auto& p : r.pieces) out.emplace_back(p.kind == PieceKind::kBrace ? "brace" : "brick", p.graph);
    return out;
  }, py::arg("graph"), py::arg("descending") = false);

  m.def("star_product", [](const py::object& a, const py::object& b, Vertex v1, Vertex v2, Pairing pairing) {
    return star_product({source(a), v1, source(b), v2, pairing}).graph;
  }, py::arg("first"), py::arg("second"), py::arg("v1") = 0, py::arg("v2") = 0,
     py::arg("pairing") = kIdentityPairing);

  m.def("scan", [](const std::string& text, const std::string& filters, const std::string& checks, unsigned workers,
                   const std::string& format) {
    ScanOptions options;
    options.filters = parse_predicates(filters);
    options.checks = parse_predicates(checks);
    options.workers = workers;
    if (format != "json" && format != "csv") throw py::value_error("format must be json or csv");
    ScanReport report;
    {
      py::gil_scoped_release release;
      std::istringstream in(text);
      report = scan_corpus(in, options);
    }
    std::ostringstream out;
    emit_report(out, report, format == "json" ? ReportFormat::kJson : ReportFormat::kCsv);
    return out.str();
  }, py::arg("text"), py::arg("filters") = "", py::arg("checks") = "", py::arg("workers") = 1,
     py::arg("format") = "json");

  m.def("lemma_suite", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& e : run_lemma_suite()) out.emplace_back(e.name, std::string(to_string(e.outcome)), e.evidence);
    return out;
  });
}
