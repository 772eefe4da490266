#include "matchent/catalog.hpp"
#include "matchent/cli.hpp"
#include "matchent/entropy.hpp"
#include "matchent/lifts.hpp"
#include "matchent/randmodels.hpp"
#include "matchent/serialize.hpp"
#include "matchent/theorems.hpp"
#include "matchent/treeformulas.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace matchent;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::str(x.str())); }

py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(q)), to_py(boost::multiprecision::denominator(q)));
}

Rational to_rational(const py::handle& x) {
  if (py::isinstance<py::float_>(x)) return from_double(x.cast<double>());
  return parse_rational(py::str(x).cast<std::string>());
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

MatchingPolynomial poly_of(const Graph& g) { return matching_polynomial(g); }

}  // namespace

PYBIND11_MODULE(_matchent, m) {
  m.doc() = "Matching polynomials, entropy functions and their tree limits";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<TooLargeError>(m, "TooLargeError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.push_back({u, v});
             return Graph(n, std::move(es));
           }),
           py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
        return out;
      })
      .def("degree", &Graph::degree)
      .def("is_bipartite", &Graph::is_bipartite)
      .def("girth", [](const Graph& g) { return girth(g); })
      .def("to_edge_list", [](const Graph& g) { return write_edge_list(g); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph v=" + std::to_string(g.vertex_count()) + " e=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("load_graph", [](const std::string& text) { return load_graph(text); });
  m.def("load_graph_file", &load_graph_file);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("complete_graph", &complete_graph);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("star_graph", &star_graph);
  m.def("hypercube", &hypercube);
  m.def("heawood_graph", &heawood_graph);
  m.def("random_tree", &random_tree, py::arg("v"), py::arg("seed"));

  m.def("matching_counts", [](const Graph& g) { return to_py(poly_of(g).coefficients); });
  m.def("matching_roots", [](const Graph& g) {
    std::vector<std::pair<double, int>> out;
    for (const auto& r : matching_measure(poly_of(g)).roots) out.push_back({r.value, r.multiplicity});
    return out;
  });
  m.def("matching_energy", [](const Graph& g) { return matching_energy(matching_measure(poly_of(g))); });
  m.def("characteristic_polynomial", [](const Graph& g) { return to_py(characteristic_polynomial(g)); });

  m.def("density", [](const Graph& g, double t) { return density(poly_of(g), t); }, py::arg("graph"), py::arg("t"));
  m.def("activity", [](const Graph& g, double p) { return activity(poly_of(g), p); }, py::arg("graph"), py::arg("p"));
  m.def(
      "entropy", [](const Graph& g, double p) {
        const auto e = entropy_at(poly_of(g), p);
        py::dict d;
        d["p"] = e.p;
        d["t"] = e.t;
        d["lambda"] = e.lambda;
        d["f"] = e.f;
        d["at_p_star"] = e.at_p_star;
        d["out_of_range"] = e.out_of_range;
        return d;
      },
      py::arg("graph"), py::arg("p"));

  m.def("tree_entropy", [](int d, double p) { return entropy_regular(d, p); }, py::arg("d"), py::arg("p"));
  m.def("biregular_tree_entropy", [](int a, int b, double p) { return entropy_biregular(a, b, p); }, py::arg("a"),
        py::arg("b"), py::arg("p"));
  m.def("tree_density", &density_regular_tree, py::arg("d"), py::arg("t"));
  m.def("tree_activity", &activity_regular_tree, py::arg("d"), py::arg("p"));
  m.def("s_function", &s_function, py::arg("d"), py::arg("t"));
  m.def("tree_matching_energy", &tree_matching_energy, py::arg("d"));
  m.def("kesten_mckay_density", &kesten_mckay_density, py::arg("d"), py::arg("x"));
  m.def(
      "closed_walks", [](int a, int b, bool a_root, int j) {
        return to_py(walk_series(a, b, a_root ? WalkSeries::Root::a_root : WalkSeries::Root::b_root, j).even);
      },
      py::arg("a"), py::arg("b"), py::arg("a_root") = true, py::arg("j") = 8);

  m.def("p_mu", [](int n, int k) { return to_py(p_mu(n, k)); });
  m.def("verify_schrijver", [](const Graph& g) { return to_json(verify_schrijver(g)); });
  m.def("verify_lmc", [](const Graph& g, int k) { return to_json(verify_lmc(g, k)); });
  m.def("verify_biregular", [](const Graph& g, int k) { return to_json(verify_biregular(g, k)); });
  m.def("verify_direct", [](const Graph& g, const std::vector<py::object>& grid) {
    std::vector<Rational> ps;
    for (const auto& p : grid) ps.push_back(to_rational(p));
    return to_json(verify_direct(g, ps));
  });
  m.def("verify_matching_energy", [](const Graph& g) { return to_json(verify_matching_energy(g)); });
  m.def("verify_hoeffding", [](const Graph& g, int k) { return to_json(verify_hoeffding_coefficient(g, k)); });
  m.def("verify_lift_lemma", [](const Graph& g, const std::vector<int>& signs) {
    const auto c = verify_lift_lemma(g, Signing{signs});
    return py::make_tuple(c.pass, to_py(c.margins));
  });
  m.def("darroch_locate", [](const Graph& g, const py::object& t) {
    const auto r = darroch_locate(poly_of(g), to_rational(t));
    py::dict d;
    d["kind"] = r.kind == DarrochResult::Kind::unique ? "unique" : r.kind == DarrochResult::Kind::pair ? "pair" : "indeterminate";
    d["mean"] = to_py(r.mean);
    d["mode"] = r.mode;
    d["argmax"] = r.argmax;
    d["consistent"] = r.consistent;
    return d;
  });

  m.def("apply_lift", [](const Graph& g, const std::vector<int>& signs) { return apply_lift(g, Signing{signs}); });
  m.def(
      "boost_girth", [](const Graph& g, std::uint64_t seed, int target) { return to_json(boost_girth(g, seed, target)); },
      py::arg("graph"), py::arg("seed"), py::arg("target_girth"));

  m.def("expected_matchings", [](int d, int n, int k) { return to_py(expected_mk_regular(d, n, k)); });
  m.def("expected_matchings_biregular", [](int a, int b, int n, int k) { return to_py(expected_mk_biregular(a, b, n, k)); });
  m.def(
      "sample_regular", [](int d, int n, std::uint64_t seed) { return sample(ConfigModelParams::regular(d, n, seed)); },
      py::arg("d"), py::arg("n"), py::arg("seed"));

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
