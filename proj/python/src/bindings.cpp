#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "indturan/algorithms.hpp"
#include "indturan/cli.hpp"
#include "indturan/counters.hpp"
#include "indturan/detectors.hpp"
#include "indturan/generators.hpp"
#include "indturan/io.hpp"
#include "indturan/isomorphism.hpp"

namespace py = pybind11;
using namespace indturan;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

py::int_ big(const BigInt& x) { return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10)); }

py::object fraction(const Rational& x) {
  return py::module_::import("fractions").attr("Fraction")(big(boost::multiprecision::numerator(x)),
                                                          big(boost::multiprecision::denominator(x)));
}

py::object embedding_or_none(const std::optional<Embedding>& e) {
  if (!e) return py::none();
  return py::cast(e->map);
}

py::dict search_dict(const SearchResult<Embedding>& r) {
  py::dict d;
  d["status"] = to_string(r.status);
  d["map"] = embedding_or_none(r.witness);
  d["nodes"] = r.nodes;
  d["diagnostic"] = r.diagnostic;
  return d;
}

Budget budget_of(std::optional<std::uint64_t> b) { return b; }

PipelineConfig config(int s, int l, int t, int p, std::optional<int> q, std::optional<double> tau, double bad_threshold,
                      std::uint64_t budget, std::uint64_t seed) {
  PipelineConfig cfg;
  cfg.s = s;
  cfg.l = l;
  cfg.t = t;
  cfg.p = p;
  cfg.q = q;
  cfg.thin_threshold = tau;
  cfg.bad_threshold = bad_threshold;
  cfg.search_budget = budget;
  cfg.enumeration_budget = budget;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generators, detectors, counters and embedding pipelines for induced Turán problems";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("degrees", &Graph::degrees)
      .def("neighbors", &Graph::neighbor_list)
      .def("edges", &Graph::edges)
      .def("induced", [](const Graph& g, const std::vector<Vertex>& vs) { return g.induced(vs); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", e=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<RootedTree>(m, "RootedTree")
      .def(py::init([](const Graph& tree, const std::vector<Vertex>& roots) { return RootedTree(tree, VertexSet(roots)); }),
           py::arg("tree"), py::arg("roots"))
      .def_property_readonly("tree", &RootedTree::tree)
      .def_property_readonly("roots", [](const RootedTree& rt) { return rt.roots().ids(); })
      .def_property_readonly("non_roots", [](const RootedTree& rt) { return rt.non_roots().ids(); });

  // graph-core
  m.def("common_neighborhood", [](const Graph& g, const std::vector<Vertex>& s) { return common_neighborhood(g, VertexSet(s)).ids(); });
  m.def("codegree", [](const Graph& g, const std::vector<Vertex>& s) { return codegree(g, VertexSet(s)); });
  m.def("degree_profile", [](const Graph& g) {
    const auto p = degree_profile(g);
    return py::make_tuple(p.min_degree, p.max_degree, fraction(p.average_degree));
  });
  m.def("is_k_almost_regular", &is_k_almost_regular, py::arg("g"), py::arg("k"));

  // generators
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("complete_graph", &complete_graph);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("theta", [](int l, int t) { return theta(l, t).graph; }, py::arg("l"), py::arg("t"));
  m.def("prism", &prism, py::arg("l"));
  m.def("rooted_path_example", &rooted_path_example);
  m.def(
      "lift",
      [](const RootedTree& rt, const std::vector<Vertex>& glued, int p) { return lift(rt, LiftSpec{VertexSet(glued), p}).graph; },
      py::arg("rt"), py::arg("glued"), py::arg("p"));
  m.def(
      "lift_family",
      [](const RootedTree& rt, int p, bool dedup) {
        py::list out;
        for (const auto& e : lift_family(rt, p, dedup)) out.append(py::make_tuple(e.spec.glued.ids(), e.lift.graph));
        return out;
      },
      py::arg("rt"), py::arg("p"), py::arg("dedup") = false);
  m.def("density", [](const RootedTree& rt) { return fraction(density(rt)); });
  m.def("clique_blowup", [](const Graph& g, int t) { return clique_blowup(g, t).graph; }, py::arg("g"), py::arg("t"));
  m.def("polarity_graph", &polarity_graph, py::arg("q"));
  m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("random_tree", &random_tree, py::arg("t"), py::arg("seed"));
  m.def("are_isomorphic", &are_isomorphic);

  // detectors
  m.def(
      "find_biclique",
      [](const Graph& g, int s) -> py::object {
        const auto c = find_biclique(g, s);
        if (!c) return py::none();
        return py::make_tuple(c->side_a.ids(), c->side_b.ids());
      },
      py::arg("g"), py::arg("s"));
  m.def(
      "find_induced", [](const Graph& g, const Graph& h, std::optional<std::uint64_t> budget) { return search_dict(find_induced(g, h, budget_of(budget))); },
      py::arg("g"), py::arg("h"), py::arg("budget") = py::none());
  m.def(
      "verify_embedding",
      [](const Graph& g, const Graph& h, const std::vector<Vertex>& map, bool induced) { return verify_embedding(g, h, Embedding{map, induced}); },
      py::arg("g"), py::arg("h"), py::arg("map"), py::arg("induced") = true);
  m.def(
      "witness_check",
      [](const Graph& g, const std::vector<Graph>& family, int s, std::optional<std::uint64_t> budget) {
        const auto r = witness_check(g, family, s, budget_of(budget));
        py::dict d;
        d["passed"] = r.passed;
        d["inconclusive"] = r.inconclusive;
        d["kss_free"] = !r.kss_violation.has_value();
        py::list violations;
        for (const auto& [i, e] : r.induced_violations) violations.append(py::make_tuple(i, e.map));
        d["induced_violations"] = violations;
        return d;
      },
      py::arg("g"), py::arg("family"), py::arg("s"), py::arg("budget") = py::none());

  // counters
  m.def("hom_closed_walks", [](const Graph& g, int k) { return big(hom_closed_walks(g, k)); }, py::arg("g"), py::arg("k"));
  m.def("walk_count", [](const Graph& g, Vertex u, Vertex v, int l) { return big(walk_count(g, u, v, l)); });
  m.def("count_induced_c4", [](const Graph& g) { return big(count_induced_c4(g)); });
  m.def(
      "count_labeled_induced",
      [](const Graph& g, const Graph& h, std::optional<std::uint64_t> budget) {
        const auto r = count_labeled_induced(g, h, budget_of(budget));
        return py::make_tuple(big(r.count), r.complete);
      },
      py::arg("g"), py::arg("h"), py::arg("budget") = py::none());
  m.def(
      "classify_closed_walks",
      [](const Graph& g, int l, std::optional<std::uint64_t> samples, std::uint64_t seed) {
        const auto c = samples ? classify_closed_walks(g, l, SampleMode{*samples, seed}) : classify_closed_walks(g, l, ExactMode{});
        py::dict d;
        d["total"] = big(c.total);
        d["degenerate"] = big(c.degenerate);
        d["induced_cycle"] = big(c.induced_cycle);
        d["chorded"] = big(c.chorded);
        d["complete"] = c.complete;
        d["mode"] = c.sample ? "sampled" : "exact";
        return d;
      },
      py::arg("g"), py::arg("l"), py::arg("samples") = py::none(), py::arg("seed") = kDefaultSeed);
  m.def(
      "thin_thick_stats",
      [](const Graph& g, std::optional<double> tau) {
        const auto st = thin_thick_stats(g, tau.value_or(default_thin_threshold(g)));
        py::dict d;
        d["induced_c4"] = big(st.induced_c4_count);
        d["thin"] = big(st.thin_count);
        d["thick"] = big(st.thick_count);
        d["tau"] = st.threshold;
        return d;
      },
      py::arg("g"), py::arg("tau") = py::none());
  m.def("two_path_tally", [](const Graph& g) {
    const auto t = two_path_tally(g);
    return py::make_tuple(t.per_vertex, t.per_pair);
  });

  // algorithms
  m.def(
      "almost_regularize",
      [](const Graph& g, double alpha, double c, int trials, std::uint64_t seed) {
        const auto r = almost_regularize(g, alpha, c, trials, seed);
        py::dict d;
        d["status"] = to_string(r.status);
        d["vertices"] = r.vertices.ids();
        d["k_bound"] = r.k_bound;
        d["achieved_ratio"] = r.achieved_ratio;
        d["iterations"] = r.iterations;
        d["diagnostic"] = r.diagnostic;
        return d;
      },
      py::arg("g"), py::arg("alpha"), py::arg("c"), py::arg("trials") = 32, py::arg("seed") = kDefaultSeed);
  m.def(
      "bad_neighbor_set", [](const Graph& g, Vertex v, double threshold) { return bad_neighbor_set(g, v, threshold).ids(); },
      py::arg("g"), py::arg("v"), py::arg("threshold"));
  m.def(
      "greedy_tree_embed",
      [](const Graph& g, const Graph& tree, double threshold, std::uint64_t seed) {
        return embedding_or_none(greedy_tree_embed(g, tree, threshold, seed).embedding);
      },
      py::arg("g"), py::arg("tree"), py::arg("threshold") = kInf,
      py::arg("seed") = kDefaultSeed);
  m.def(
      "enumerate_tree_embeddings",
      [](const Graph& g, const Graph& tree, double threshold, std::optional<std::uint64_t> budget) {
        const auto r = enumerate_tree_embeddings(g, tree, threshold, budget_of(budget));
        return py::make_tuple(r.count, r.complete);
      },
      py::arg("g"), py::arg("tree"), py::arg("threshold") = kInf,
      py::arg("budget") = py::none());
  m.def(
      "select_regular",
      [](const std::vector<std::vector<Value>>& vectors, int q) -> py::object {
        const auto r = select_regular(vectors, q);
        if (!r.success) return py::none();
        return py::cast(r.chosen);
      },
      py::arg("vectors"), py::arg("q"));
  m.def("selection_threshold", [](int t, int q) { return big(selection_threshold(t, q)); });
  m.def(
      "find_induced_theta",
      [](const Graph& g, int l, int t, std::uint64_t budget) {
        return search_dict(find_induced_theta(g, l, t, config(2, l, t, 2, std::nullopt, std::nullopt, kInf, budget, kDefaultSeed)));
      },
      py::arg("g"), py::arg("l"), py::arg("t"), py::arg("budget") = PipelineConfig{}.search_budget);
  m.def(
      "find_induced_prism",
      [](const Graph& g, int l, std::optional<double> tau, std::uint64_t budget) {
        return search_dict(find_induced_prism(g, l, config(2, l, 2, 2, std::nullopt, tau, kInf, budget, kDefaultSeed)));
      },
      py::arg("g"), py::arg("l"), py::arg("tau") = py::none(), py::arg("budget") = PipelineConfig{}.search_budget);
  m.def(
      "find_induced_lift",
      [](const Graph& g, const RootedTree& rt, int p, std::optional<int> q, double threshold, std::uint64_t budget) {
        const auto cfg = config(2, 2, rt.order(), p, q, std::nullopt, threshold, budget, kDefaultSeed);
        const auto r = find_induced_lift(g, rt, p, cfg);
        py::dict d;
        d["status"] = to_string(r.status);
        d["glued"] = r.lift ? py::cast(r.lift->spec.glued.ids()) : py::none();
        d["map"] = embedding_or_none(r.embedding);
        d["stage"] = r.stage;
        d["diagnostic"] = r.diagnostic;
        return d;
      },
      py::arg("g"), py::arg("rt"), py::arg("p"), py::arg("q") = py::none(),
      py::arg("threshold") = kInf, py::arg("budget") = PipelineConfig{}.enumeration_budget);
  m.def(
      "find_rich_set",
      [](const Graph& g, double tau, int c1, int c2, int trials, std::uint64_t seed) -> py::object {
        const auto r = find_rich_set(g, tau, c1, c2, trials, seed);
        if (!r.set) return py::none();
        return py::cast(r.set->ids());
      },
      py::arg("g"), py::arg("tau"), py::arg("c1"), py::arg("c2"), py::arg("trials") = 64, py::arg("seed") = kDefaultSeed);

  // io
  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("to_graph6", &to_graph6);
  m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
  m.def("to_edge_list", &to_edge_list);

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) {
        const auto r = run_command(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"));
}
