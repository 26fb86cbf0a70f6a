#include "indturan/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "indturan/algorithms.hpp"
#include "indturan/counters.hpp"
#include "indturan/detectors.hpp"
#include "indturan/errors.hpp"
#include "indturan/generators.hpp"
#include "indturan/io.hpp"

namespace indturan {

namespace {

struct Params {
  std::string input;
  std::string input_format;
  std::string output;
  std::string format = "csv";
  std::string graph_format;
  std::string family;
  std::string pattern;
  std::string tree;
  std::string vectors;
  std::vector<int> roots;
  std::vector<int> glued;
  std::vector<int> q_list;
  std::vector<int> t_list;
  int l = 2;
  int t = 2;
  int p = 2;
  int q = 2;
  int s = 2;
  int k = 4;
  int n = 3;
  int u = 0;
  int v = 0;
  int c1 = 3;
  int c2 = 3;
  int trials = 100;
  int samples = 0;
  int tree_order = 0;
  double tau = 0;
  double threshold = 0;
  double alpha = 0.5;
  double c = 1.0;
  double prob = 0.5;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = 0;
  std::uint64_t path_cap = 20'000;
  bool timing = false;
  bool fallback = false;
  bool enumerate = false;
  bool analysis_threshold = false;
};

// Options whose presence matters, looked up by name after parsing.
using Given = std::map<std::string, std::vector<CLI::Option*>>;

bool given(const Given& g, const std::string& name) {
  auto it = g.find(name);
  if (it == g.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [](const CLI::Option* o) { return o->count() > 0; });
}

struct Outcome {
  std::optional<ResultTable> table;
  std::string raw;
  int code = kExitPass;
};

std::string map_string(const std::vector<Vertex>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + "]";
}

std::string list_string(const VertexSet& s) { return map_string(s.ids()); }

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return kExitPass;
    case SearchStatus::absent:
      return kExitViolation;
    case SearchStatus::exhausted:
      return kExitBudget;
  }
  return kExitViolation;
}

Graph load_input(const Params& p) {
  if (p.input.empty()) throw InputError("--input is required");
  const auto fmt = p.input_format.empty() ? format_for_path(p.input) : parse_graph_format(p.input_format);
  return parse_graph(read_text_file(p.input), fmt);
}

Graph load_single(const std::string& path) {
  if (path.empty()) throw InputError("missing graph file argument");
  return read_graph_file(path);
}

Budget budget_of(const Params& p, const Given& g) { return given(g, "--budget") ? Budget(p.budget) : std::nullopt; }

RootedTree rooted_tree_of(const Params& p) {
  if (p.tree.empty()) return rooted_path_example();
  if (p.roots.empty()) throw InputError("--roots is required with --tree");
  return RootedTree(load_single(p.tree), VertexSet(std::vector<Vertex>(p.roots.begin(), p.roots.end())));
}

std::map<std::string, std::string> base_row(const Graph& g) {
  return {{"n", std::to_string(g.order())}, {"e", std::to_string(g.edge_count())}};
}

Outcome single_row(std::vector<std::string> cols, const std::map<std::string, std::string>& row, int code = kExitPass) {
  Outcome out;
  out.table.emplace(std::move(cols));
  out.table->add_row(row);
  out.code = code;
  return out;
}

// ---- gen ----

Outcome emit_generated(const Graph& g, const Params& p) {
  Outcome out;
  GraphFormat fmt = GraphFormat::graph6;
  if (!p.graph_format.empty()) {
    fmt = parse_graph_format(p.graph_format);
  } else if (!p.output.empty()) {
    fmt = format_for_path(p.output);
  }
  const auto text = emit_graph(g, fmt);
  if (p.output.empty()) {
    out.raw = text;
    return out;
  }
  write_text_file(p.output, text);
  auto row = base_row(g);
  row["path"] = p.output;
  return single_row({"n", "e", "path"}, row);
}

// ---- check ----

Outcome check_kss(const Params& p) {
  const Graph g = load_input(p);
  const auto cert = find_biclique(g, p.s);
  auto row = base_row(g);
  row["s"] = std::to_string(p.s);
  row["kss_free"] = format_bool(!cert);
  row["side_a"] = cert ? list_string(cert->side_a) : "[]";
  row["side_b"] = cert ? list_string(cert->side_b) : "[]";
  return single_row({"n", "e", "s", "kss_free", "side_a", "side_b"}, row, cert ? kExitViolation : kExitPass);
}

Outcome check_induced(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  const Graph h = load_single(p.pattern);
  const auto r = find_induced(g, h, budget_of(p, gv));
  auto row = base_row(g);
  row["status"] = to_string(r.status);
  row["induced_free"] = format_bool(r.status == SearchStatus::absent);
  row["nodes"] = std::to_string(r.nodes);
  row["map"] = r.witness ? map_string(r.witness->map) : "[]";
  int code = kExitPass;
  if (r.status == SearchStatus::found) code = kExitViolation;
  if (r.status == SearchStatus::exhausted) code = kExitBudget;
  return single_row({"n", "e", "status", "induced_free", "nodes", "map"}, row, code);
}

struct WitnessRow {
  std::map<std::string, std::string> cells;
  int code = kExitPass;
};

WitnessRow witness_row(const Graph& g, const std::vector<Graph>& family, int s, Budget budget) {
  const auto rep = witness_check(g, family, s, budget);
  WitnessRow out;
  out.cells = base_row(g);
  out.cells["s"] = std::to_string(s);
  out.cells["kss_free"] = format_bool(!rep.kss_violation);
  out.cells["induced_free"] = format_bool(rep.induced_violations.empty());
  out.cells["inconclusive"] = format_bool(rep.inconclusive);
  out.cells["passed"] = format_bool(rep.passed);
  if (rep.kss_violation || !rep.induced_violations.empty()) {
    out.code = kExitViolation;
  } else if (rep.inconclusive) {
    out.code = kExitBudget;
  }
  return out;
}

Outcome check_witness(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  if (p.family.empty()) throw InputError("--family is required");
  const auto family = read_graphs_file(p.family);
  auto w = witness_row(g, family, p.s, budget_of(p, gv));
  return single_row({"n", "e", "s", "kss_free", "induced_free", "inconclusive", "passed"}, w.cells, w.code);
}

// ---- count ----

Outcome count_hom(const Params& p) {
  const Graph g = load_input(p);
  auto row = base_row(g);
  row["k"] = std::to_string(p.k);
  row["hom"] = to_string(hom_closed_walks(g, p.k));
  return single_row({"n", "e", "k", "hom"}, row);
}

Outcome count_walks(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  if (p.l < 0) throw ParameterError("--l must be non-negative");
  Outcome out;
  out.table.emplace(std::vector<std::string>{"n", "e", "l", "u", "v", "walks"});
  const bool pair = given(gv, "--u") || given(gv, "--v");
  const auto w = walk_matrix(g, p.l);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u; v < g.order(); ++v) {
      if (pair && !(u == std::min(p.u, p.v) && v == std::max(p.u, p.v))) continue;
      auto row = base_row(g);
      row["l"] = std::to_string(p.l);
      row["u"] = std::to_string(u);
      row["v"] = std::to_string(v);
      row["walks"] = to_string(w.at(u, v));
      out.table->add_row(row);
    }
  }
  if (pair && (!g.valid_vertex(p.u) || !g.valid_vertex(p.v))) throw InputError("--u/--v out of range");
  return out;
}

Outcome count_c4(const Params& p) {
  const Graph g = load_input(p);
  auto row = base_row(g);
  row["induced_c4"] = to_string(count_induced_c4(g));
  return single_row({"n", "e", "induced_c4"}, row);
}

Outcome count_thin_thick(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  const double tau = given(gv, "--tau") ? p.tau : default_thin_threshold(g);
  const auto st = thin_thick_stats(g, tau);
  auto row = base_row(g);
  row["tau"] = format_double(tau);
  row["induced_c4"] = to_string(st.induced_c4_count);
  row["thin"] = to_string(st.thin_count);
  row["thick"] = to_string(st.thick_count);
  return single_row({"n", "e", "tau", "induced_c4", "thin", "thick"}, row);
}

Outcome count_two_paths(const Params& p) {
  const Graph g = load_input(p);
  const auto tally = two_path_tally(g);
  auto row = base_row(g);
  row["vertex_total"] = std::to_string(tally.vertex_total());
  row["pair_total"] = std::to_string(tally.pair_total());
  row["equal"] = format_bool(tally.vertex_total() == tally.pair_total());
  return single_row({"n", "e", "vertex_total", "pair_total", "equal"}, row);
}

Outcome count_induced(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  const Graph h = load_single(p.pattern);
  const auto r = count_labeled_induced(g, h, budget_of(p, gv));
  auto row = base_row(g);
  row["labelled"] = to_string(r.count);
  row["complete"] = format_bool(r.complete);
  row["nodes"] = std::to_string(r.nodes);
  return single_row({"n", "e", "labelled", "complete", "nodes"}, row, r.complete ? kExitPass : kExitBudget);
}

Outcome count_classify(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  WalkClassification wc;
  if (p.samples > 0) {
    wc = classify_closed_walks(g, p.l, SampleMode{static_cast<std::uint64_t>(p.samples), p.seed});
  } else {
    ExactMode mode;
    if (given(gv, "--budget")) mode.budget = p.budget;
    wc = classify_closed_walks(g, p.l, mode);
  }
  auto row = base_row(g);
  row["length"] = std::to_string(wc.length);
  row["mode"] = p.samples > 0 ? "sampled" : "exact";
  row["total"] = to_string(wc.total);
  row["degenerate"] = to_string(wc.degenerate);
  row["induced_cycle"] = to_string(wc.induced_cycle);
  row["chorded"] = to_string(wc.chorded);
  row["complete"] = format_bool(wc.complete);
  row["seed"] = std::to_string(p.seed);
  return single_row({"n", "e", "length", "mode", "total", "degenerate", "induced_cycle", "chorded", "complete", "seed"},
                    row, wc.complete ? kExitPass : kExitBudget);
}

// ---- embed ----

PipelineConfig config_of(const Params& p, const Given& gv) {
  PipelineConfig cfg;
  cfg.s = p.s;
  cfg.l = p.l;
  cfg.t = p.t;
  cfg.p = p.p;
  if (given(gv, "--q")) cfg.q = p.q;
  if (given(gv, "--tau")) cfg.thin_threshold = p.tau;
  if (given(gv, "--threshold")) cfg.bad_threshold = p.threshold;
  if (given(gv, "--budget")) {
    cfg.enumeration_budget = p.budget;
    cfg.search_budget = p.budget;
  }
  cfg.path_cap = p.path_cap;
  cfg.prism_fallback = p.fallback;
  cfg.seed = p.seed;
  return cfg;
}

Outcome embed_tree(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  Graph tree;
  if (!p.tree.empty()) {
    tree = load_single(p.tree);
  } else if (p.tree_order > 0) {
    tree = random_tree(p.tree_order, p.seed);
  } else {
    throw InputError("embed tree needs --tree or --tree-order");
  }
  double threshold = std::numeric_limits<double>::infinity();
  if (given(gv, "--threshold")) threshold = p.threshold;
  if (p.analysis_threshold) threshold = supersaturation_threshold(g, p.s);

  const auto r = greedy_tree_embed(g, tree, threshold, p.seed);
  auto row = base_row(g);
  row["tree_order"] = std::to_string(tree.order());
  row["threshold"] = format_double(threshold);
  row["found"] = format_bool(r.embedding.has_value());
  row["failed_step"] = std::to_string(r.failed_step);
  row["map"] = r.embedding ? map_string(r.embedding->map) : "[]";
  row["seed"] = std::to_string(p.seed);
  std::vector<std::string> cols{"n", "e", "tree_order", "threshold", "found", "failed_step", "map", "seed"};
  int code = r.embedding ? kExitPass : kExitViolation;
  if (p.enumerate) {
    const auto en = enumerate_tree_embeddings(g, tree, threshold, budget_of(p, gv));
    row["enumerated"] = std::to_string(en.count);
    row["complete"] = format_bool(en.complete);
    cols.push_back("enumerated");
    cols.push_back("complete");
    if (!en.complete && code != kExitPass) code = kExitBudget;
  }
  return single_row(cols, row, code);
}

Outcome embed_lift(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  const auto rt = rooted_tree_of(p);
  const auto r = find_induced_lift(g, rt, p.p, config_of(p, gv));
  auto row = base_row(g);
  row["p"] = std::to_string(p.p);
  row["status"] = to_string(r.status);
  row["stage"] = r.stage;
  row["glued"] = r.lift ? list_string(r.lift->spec.glued) : "[]";
  row["tree_copies"] = std::to_string(r.tree_copies);
  row["largest_group"] = std::to_string(r.largest_group);
  row["conflict_edges"] = std::to_string(r.conflict_edges);
  row["independent_set"] = std::to_string(r.independent_set);
  row["map"] = r.embedding ? map_string(r.embedding->map) : "[]";
  row["diagnostic"] = r.diagnostic;
  return single_row({"n", "e", "p", "status", "stage", "glued", "tree_copies", "largest_group", "conflict_edges",
                     "independent_set", "map", "diagnostic"},
                    row, status_code(r.status));
}

Outcome search_row(const Graph& g, const SearchResult<Embedding>& r, std::map<std::string, std::string> extra,
                   std::vector<std::string> cols) {
  auto row = base_row(g);
  row.merge(extra);
  row["status"] = to_string(r.status);
  row["nodes"] = std::to_string(r.nodes);
  row["map"] = r.witness ? map_string(r.witness->map) : "[]";
  row["diagnostic"] = r.diagnostic;
  for (const char* c : {"status", "nodes", "map", "diagnostic"}) cols.emplace_back(c);
  return single_row(cols, row, status_code(r.status));
}

Outcome embed_theta(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  const auto r = find_induced_theta(g, p.l, p.t, config_of(p, gv));
  return search_row(g, r, {{"l", std::to_string(p.l)}, {"t", std::to_string(p.t)}}, {"n", "e", "l", "t"});
}

Outcome embed_prism(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  const auto r = find_induced_prism(g, p.l, config_of(p, gv));
  return search_row(g, r, {{"l", std::to_string(p.l)}}, {"n", "e", "l"});
}

// ---- pipeline ----

Outcome pipeline_regularize(const Params& p) {
  const Graph g = load_input(p);
  const auto r = almost_regularize(g, p.alpha, p.c, p.trials, p.seed);
  std::string stages;
  for (const auto& st : r.log) {
    if (!stages.empty()) stages += ";";
    stages += std::to_string(st.index) + ":" + std::to_string(st.vertices) + ":" + format_double(st.high_degree_threshold) +
              ":" + format_double(st.high_degree_sum) + ":" + std::to_string(st.chosen_size);
  }
  auto row = base_row(g);
  row["status"] = to_string(r.status);
  row["m"] = std::to_string(r.subgraph.order());
  row["edges_h"] = std::to_string(r.subgraph.edge_count());
  row["k_bound"] = format_double(r.k_bound);
  row["achieved_ratio"] = format_double(r.achieved_ratio);
  row["iterations"] = std::to_string(r.iterations);
  row["stages"] = stages;
  row["vertices"] = list_string(r.vertices);
  row["diagnostic"] = r.diagnostic;
  row["seed"] = std::to_string(p.seed);
  return single_row({"n", "e", "status", "m", "edges_h", "k_bound", "achieved_ratio", "iterations", "stages", "vertices",
                     "diagnostic", "seed"},
                    row, r.success() ? kExitPass : kExitViolation);
}

Outcome pipeline_rich_set(const Params& p, const Given& gv) {
  const Graph g = load_input(p);
  const double tau = given(gv, "--tau") ? p.tau : default_thin_threshold(g);
  const auto r = find_rich_set(g, tau, p.c1, p.c2, p.trials, p.seed);
  auto row = base_row(g);
  row["tau"] = format_double(tau);
  row["found"] = format_bool(r.set.has_value());
  row["set"] = r.set ? list_string(*r.set) : "[]";
  row["x"] = std::to_string(r.audit.x);
  row["y"] = std::to_string(r.audit.y);
  row["thick_pairs"] = std::to_string(r.audit.thick_pairs);
  row["a_size"] = std::to_string(r.audit.a_size);
  row["b_size"] = std::to_string(r.audit.b_size);
  row["probability"] = format_double(r.audit.probability);
  row["best_set"] = std::to_string(r.audit.best_set);
  row["certified"] = format_bool(r.audit.certified);
  row["diagnostic"] = r.diagnostic;
  row["seed"] = std::to_string(p.seed);
  return single_row({"n", "e", "tau", "found", "set", "x", "y", "thick_pairs", "a_size", "b_size", "probability",
                     "best_set", "certified", "diagnostic", "seed"},
                    row, r.set ? kExitPass : kExitViolation);
}

std::vector<std::vector<Value>> read_vectors(const std::string& path) {
  if (path.empty()) throw InputError("--vectors is required");
  std::istringstream in(read_text_file(path));
  std::vector<std::vector<Value>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    std::vector<Value> v;
    std::string tok;
    while (fields >> tok) {
      Value x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw InputError("vectors: line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      }
      v.push_back(x);
    }
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

Outcome pipeline_select(const Params& p) {
  const auto vs = read_vectors(p.vectors);
  const auto r = select_regular(vs, p.q);
  std::string chosen = "[";
  for (std::size_t i = 0; i < r.chosen.size(); ++i) chosen += (i ? "," : "") + std::to_string(r.chosen[i]);
  chosen += "]";
  std::string verdicts;
  for (auto v : r.verdicts) {
    if (!verdicts.empty()) verdicts += ";";
    verdicts += v == PositionVerdict::all_same ? "same" : v == PositionVerdict::pairwise_distinct ? "distinct" : "mixed";
  }
  std::map<std::string, std::string> row{{"vectors", std::to_string(vs.size())},
                                         {"q", std::to_string(p.q)},
                                         {"threshold", to_string(selection_threshold(vs.empty() ? 0 : static_cast<int>(vs.front().size()), p.q))},
                                         {"below_guarantee", format_bool(r.below_guarantee)},
                                         {"success", format_bool(r.success)},
                                         {"chosen", chosen},
                                         {"verdicts", verdicts}};
  return single_row({"vectors", "q", "threshold", "below_guarantee", "success", "chosen", "verdicts"}, row,
                    r.success ? kExitPass : kExitViolation);
}

// ---- sweep ----

struct SweepPoint {
  std::map<std::string, std::string> cells;
  int order = 0;
  int code = kExitPass;
};

Outcome finish_sweep(std::vector<std::string> cols, std::vector<SweepPoint> points) {
  std::stable_sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  Outcome out;
  out.table.emplace(std::move(cols));
  int worst = kExitPass;
  for (const auto& pt : points) {
    out.table->add_row(pt.cells);
    if (pt.code == kExitViolation || (pt.code == kExitBudget && worst == kExitPass)) worst = pt.code;
  }
  out.code = worst;
  return out;
}

Outcome sweep_polarity(const Params& p, const Given& gv) {
  if (p.q_list.empty()) throw InputError("--q-list is required");
  const auto family = p.family.empty() ? std::vector<Graph>{cycle_graph(4)} : read_graphs_file(p.family);
  std::vector<SweepPoint> points;
  for (int q : p.q_list) {
    const Graph g = polarity_graph(q);
    auto w = witness_row(g, family, p.s, budget_of(p, gv));
    w.cells["q"] = std::to_string(q);
    w.cells["seed"] = std::to_string(p.seed);
    points.push_back({w.cells, g.order(), w.code});
  }
  return finish_sweep({"n", "e", "passed", "seed", "q", "s", "kss_free", "induced_free", "inconclusive"}, points);
}

Outcome sweep_blowup(const Params& p, const Given& gv) {
  if (p.t_list.empty()) throw InputError("--t-list is required");
  if (p.family.empty()) throw InputError("--family is required");
  const Graph base = load_input(p);
  const auto family = read_graphs_file(p.family);
  int h = 0;
  for (const auto& f : family) h = std::max(h, f.order());
  std::vector<SweepPoint> points;
  for (int t : p.t_list) {
    const Graph g = clique_blowup(base, t).graph;
    const int s = given(gv, "--s") ? p.s : 2 * h * t;
    auto w = witness_row(g, family, s, budget_of(p, gv));
    w.cells["t"] = std::to_string(t);
    w.cells["seed"] = std::to_string(p.seed);
    points.push_back({w.cells, g.order(), w.code});
  }
  return finish_sweep({"n", "e", "passed", "seed", "t", "s", "kss_free", "induced_free", "inconclusive"}, points);
}

// ---- wiring ----

struct Leaf {
  CLI::App* app;
  std::function<Outcome()> run;
};

class Cli {
 public:
  Cli() : app_("Induced Turán experiments: generators, detectors, counters and pipelines", "indturan") {
    app_.require_subcommand(1);
    app_.set_help_all_flag("--help-all", "Show help for every subcommand");

    auto* gen = group("gen", "Generate a graph");
    {
      auto* c = leaf(gen, "theta", "t internally disjoint paths of length l", [this] { return emit_generated(theta(p_.l, p_.t).graph, p_); });
      c->add_option("--l", p_.l, "path length")->required();
      c->add_option("--t", p_.t, "number of paths")->required();
      gen_outputs(c);
      c = leaf(gen, "prism", "two l-cycles joined by a perfect matching", [this] { return emit_generated(prism(p_.l), p_); });
      c->add_option("--l", p_.l, "cycle length")->required();
      gen_outputs(c);
      c = leaf(gen, "lift", "(p;S)-lift of a rooted tree (default: the rooted 4-edge path)", [this] {
        const auto rt = rooted_tree_of(p_);
        return emit_generated(lift(rt, LiftSpec{VertexSet(std::vector<Vertex>(p_.glued.begin(), p_.glued.end())), p_.p}).graph, p_);
      });
      c->add_option("--p", p_.p, "number of copies")->required();
      c->add_option("--glued", p_.glued, "non-root tree vertices shared by every copy")->delimiter(',');
      tree_options(c);
      gen_outputs(c);
      c = leaf(gen, "blowup", "clique blowup of --input", [this] { return emit_generated(clique_blowup(load_input(p_), p_.t).graph, p_); });
      c->add_option("--t", p_.t, "blob size")->required();
      input_option(c);
      gen_outputs(c);
      c = leaf(gen, "polarity", "polarity graph of PG(2,q)", [this] { return emit_generated(polarity_graph(p_.q), p_); });
      c->add_option("--q", p_.q, "prime field order")->required();
      gen_outputs(c);
      c = leaf(gen, "cycle", "cycle C_n", [this] { return emit_generated(cycle_graph(p_.n), p_); });
      c->add_option("--n", p_.n, "order")->required();
      gen_outputs(c);
      c = leaf(gen, "random", "G(n,p) with a fixed seed", [this] { return emit_generated(erdos_renyi(p_.n, p_.prob, p_.seed), p_); });
      c->add_option("--n", p_.n, "order")->required();
      c->add_option("--prob", p_.prob, "edge probability");
      c->add_option("--seed", p_.seed, "random seed");
      gen_outputs(c);
    }

    auto* check = group("check", "Check a graph against forbidden structures");
    {
      auto* c = leaf(check, "kss", "search for a K_{s,s} subgraph", [this] { return check_kss(p_); });
      c->add_option("--s", p_.s, "biclique side")->required();
      input_option(c);
      table_options(c);
      c = leaf(check, "induced", "search for an induced copy of --pattern", [this] { return check_induced(p_, given_); });
      c->add_option("--pattern", p_.pattern, "pattern graph file")->required();
      input_option(c);
      budget_option(c);
      table_options(c);
      c = leaf(check, "witness", "K_{s,s}-freeness plus induced-freeness for a family", [this] { return check_witness(p_, given_); });
      c->add_option("--s", p_.s, "biclique side")->required();
      c->add_option("--family", p_.family, "family file (one graph6 per line)")->required();
      input_option(c);
      budget_option(c);
      table_options(c);
    }

    auto* count = group("count", "Exact counts");
    {
      auto* c = leaf(count, "hom", "closed k-walks, hom(C_k, G)", [this] { return count_hom(p_); });
      c->add_option("--k", p_.k, "cycle length")->required();
      input_option(c);
      table_options(c);
      c = leaf(count, "walks", "walk counts of length l", [this] { return count_walks(p_, given_); });
      c->add_option("--l", p_.l, "walk length")->required();
      track("--u", c->add_option("--u", p_.u, "first endpoint"));
      track("--v", c->add_option("--v", p_.v, "second endpoint"));
      input_option(c);
      table_options(c);
      c = leaf(count, "c4", "induced 4-cycles", [this] { return count_c4(p_); });
      input_option(c);
      table_options(c);
      c = leaf(count, "thin-thick", "thin/thick split of induced 4-cycles", [this] { return count_thin_thick(p_, given_); });
      tau_option(c);
      input_option(c);
      table_options(c);
      c = leaf(count, "two-paths", "two-path tallies by midpoint and by endpoints", [this] { return count_two_paths(p_); });
      input_option(c);
      table_options(c);
      c = leaf(count, "induced", "labelled induced copies of --pattern", [this] { return count_induced(p_, given_); });
      c->add_option("--pattern", p_.pattern, "pattern graph file")->required();
      input_option(c);
      budget_option(c);
      table_options(c);
      c = leaf(count, "classify", "closed 2l-walks by degenerate / induced / chorded", [this] { return count_classify(p_, given_); });
      c->add_option("--l", p_.l, "half length")->required();
      c->add_option("--samples", p_.samples, "sample size (0 = exact)");
      c->add_option("--seed", p_.seed, "random seed");
      input_option(c);
      budget_option(c);
      table_options(c);
    }

    auto* embed = group("embed", "Constructive embedding pipelines");
    {
      auto* c = leaf(embed, "tree", "greedy induced-tree embedding", [this] { return embed_tree(p_, given_); });
      c->add_option("--tree", p_.tree, "tree file");
      c->add_option("--tree-order", p_.tree_order, "random tree order (with --seed)");
      track("--threshold", c->add_option("--threshold", p_.threshold, "bad-neighbour codegree cut-off"));
      c->add_flag("--analysis-threshold", p_.analysis_threshold, "use d^(1-1/(3s)) as the cut-off");
      c->add_option("--s", p_.s, "s for --analysis-threshold");
      c->add_flag("--enumerate", p_.enumerate, "also count every embedding the schema allows");
      c->add_option("--seed", p_.seed, "random seed");
      input_option(c);
      budget_option(c);
      table_options(c);
      c = leaf(embed, "lift", "induced member of the lift family", [this] { return embed_lift(p_, given_); });
      c->add_option("--p", p_.p, "copies")->required();
      track("--q", c->add_option("--q", p_.q, "copies fed to selection (default p)"));
      track("--threshold", c->add_option("--threshold", p_.threshold, "bad-neighbour codegree cut-off"));
      tree_options(c);
      input_option(c);
      budget_option(c);
      table_options(c);
      c = leaf(embed, "theta", "induced theta graph", [this] { return embed_theta(p_, given_); });
      c->add_option("--l", p_.l, "path length")->required();
      c->add_option("--t", p_.t, "number of paths")->required();
      c->add_option("--path-cap", p_.path_cap, "induced paths kept per terminal pair");
      input_option(c);
      budget_option(c);
      table_options(c);
      c = leaf(embed, "prism", "induced prism on two 2l-cycles", [this] { return embed_prism(p_, given_); });
      c->add_option("--l", p_.l, "half cycle length")->required();
      tau_option(c);
      c->add_flag("--fallback", p_.fallback, "fall back to direct induced search");
      input_option(c);
      budget_option(c);
      table_options(c);
    }

    auto* pipe = group("pipeline", "Structural pipelines");
    {
      auto* c = leaf(pipe, "regularize", "pass to an almost-regular induced subgraph", [this] { return pipeline_regularize(p_); });
      c->add_option("--alpha", p_.alpha, "density exponent in (0,1)")->required();
      c->add_option("--c", p_.c, "density constant C")->required();
      c->add_option("--trials", p_.trials, "samples per stage");
      c->add_option("--seed", p_.seed, "random seed");
      input_option(c);
      table_options(c);
      c = leaf(pipe, "rich-set", "set whose triples have large codegree", [this] { return pipeline_rich_set(p_, given_); });
      tau_option(c);
      c->add_option("--c1", p_.c1, "codegree target")->required();
      c->add_option("--c2", p_.c2, "size target")->required();
      c->add_option("--trials", p_.trials, "random trials per edge");
      c->add_option("--seed", p_.seed, "random seed");
      input_option(c);
      table_options(c);
      c = leaf(pipe, "select", "choose q vectors with regular intersections", [this] { return pipeline_select(p_); });
      c->add_option("--vectors", p_.vectors, "one whitespace-separated vector per line")->required();
      c->add_option("--q", p_.q, "vectors to choose")->required();
      table_options(c);
    }

    auto* sweep = group("sweep", "Parameter sweeps (CSV sorted by n)");
    {
      auto* c = leaf(sweep, "polarity", "witness checks over polarity graphs", [this] { return sweep_polarity(p_, given_); });
      c->add_option("--q-list", p_.q_list, "primes")->delimiter(',')->required();
      c->add_option("--s", p_.s, "biclique side");
      c->add_option("--family", p_.family, "family file (default: C4)");
      c->add_option("--seed", p_.seed, "recorded seed");
      budget_option(c);
      table_options(c);
      c = leaf(sweep, "blowup", "witness checks over clique blowups of --input", [this] { return sweep_blowup(p_, given_); });
      c->add_option("--t-list", p_.t_list, "blob sizes")->delimiter(',')->required();
      track("--s", c->add_option("--s", p_.s, "biclique side (default 2 h t)"));
      c->add_option("--family", p_.family, "family file")->required();
      c->add_option("--seed", p_.seed, "recorded seed");
      input_option(c);
      budget_option(c);
      table_options(c);
    }
  }

  CommandOutput run(const std::vector<std::string>& args) {
    CommandOutput out;
    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app_.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out.out = help_text(false);
      return out;
    } catch (const CLI::CallForAllHelp&) {
      out.out = help_text(true);
      return out;
    } catch (const CLI::ParseError& e) {
      return failure("usage", e.what());
    }
    for (const auto& l : leaves_) {
      if (!l.app->parsed()) continue;
      try {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = l.run();
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.exit_code = o.code;
        if (o.table) {
          if (p_.timing) o.table->append_column("runtime_ms", format_double(ms));
          out.out = p_.format == "json" ? o.table->to_json() : o.table->to_csv();
        } else {
          out.out = o.raw;
        }
        return out;
      } catch (const ParseError& e) {
        return failure("parse", e.what());
      } catch (const ValidationError& e) {
        return failure("validation", e.what());
      } catch (const ParameterError& e) {
        return failure("parameter", e.what());
      } catch (const InputError& e) {
        return failure("input", e.what());
      } catch (const std::exception& e) {
        return failure("internal", e.what());
      }
    }
    return failure("usage", "no command given");
  }

 private:
  CLI::App* group(const std::string& name, const std::string& desc) {
    auto* g = app_.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  }

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc, std::function<Outcome()> run) {
    auto* c = parent->add_subcommand(name, desc);
    leaves_.push_back({c, std::move(run)});
    return c;
  }

  void input_option(CLI::App* c) {
    c->add_option("--input", p_.input, "input graph (.g6 = graph6, otherwise edge list)")->required();
    c->add_option("--input-format", p_.input_format, "override input format: graph6 | edges");
  }

  void table_options(CLI::App* c) {
    c->add_option("--format", p_.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    c->add_flag("--timing", p_.timing, "append a runtime_ms column");
  }

  void gen_outputs(CLI::App* c) {
    c->add_option("--output", p_.output, "write the graph here instead of stdout");
    c->add_option("--graph-format", p_.graph_format, "graph6 | edges");
    table_options(c);
  }

  void tree_options(CLI::App* c) {
    c->add_option("--tree", p_.tree, "rooted tree file");
    c->add_option("--roots", p_.roots, "root vertices of --tree")->delimiter(',');
  }

  void budget_option(CLI::App* c) {
    track("--budget", c->add_option("--budget", p_.budget, "node budget for backtracking searches"));
  }

  void track(const std::string& name, CLI::Option* o) { given_[name].push_back(o); }

  void tau_option(CLI::App* c) {
    track("--tau", c->add_option("--tau", p_.tau, "thin/thick codegree threshold (default d^(2/3))"));
  }

  CommandOutput failure(const std::string& kind, const std::string& message) const {
    nlohmann::ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    j["exit_code"] = kExitInputError;
    CommandOutput out;
    out.exit_code = kExitInputError;
    out.err = j.dump() + "\n";
    return out;
  }

  std::string help_text(bool all) const {
    const CLI::App* deepest = &app_;
    for (bool moved = true; moved;) {
      moved = false;
      for (const auto* sub : deepest->get_subcommands()) {
        deepest = sub;
        moved = true;
        break;
      }
    }
    return all ? app_.help("", CLI::AppFormatMode::All) : deepest->help();
  }

  CLI::App app_;
  Params p_;
  Given given_;
  std::vector<Leaf> leaves_;
};

}  // namespace

CommandOutput run_command(const std::vector<std::string>& args) {
  Cli cli;
  return cli.run(args);
}

}  // namespace indturan
