#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "indturan/algorithms.hpp"
#include "indturan/errors.hpp"

namespace indturan {

namespace analysis_constants {

double lift_q(int p, int s, int t) { return std::pow(2.0 * p, s) * s * std::pow(t, 2.0 * s - 1.0); }

double lift_copies(int t, double q) {
  const double f = std::tgamma(t + 1.0);
  return f * f * std::pow(q, t + 1.0);
}

double theta_f(int l, int t, int s) { return std::pow(static_cast<double>(l) * t, 20.0 * s); }

double prism_f(int l, int s) { return std::pow(6.0, s) * std::pow(static_cast<double>(s), 20.0 * l * l); }

double prism_g(int l, int s) { return std::pow(prism_f(l, s), 1.0 / l); }

double rich_set_c1(int l, int s) { return std::pow(16.0 * l * l * s, 8.0 * l + 10.0); }

double prism_lambda(int l, int s) { return s * std::pow(80.0, s) * std::pow(static_cast<double>(l), 2.0 * s); }

double prism_delta(int l, int s) {
  const double lambda = prism_lambda(l, s);
  return 1.0 / (100.0 * lambda * lambda);
}

}  // namespace analysis_constants

std::vector<Vertex> greedy_independent_set(const Graph& g) {
  const int n = g.order();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> deg = g.degrees();
  std::vector<Vertex> out;
  for (;;) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[static_cast<std::size_t>(v)] && (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)])) best = v;
    }
    if (best < 0) break;
    out.push_back(best);
    std::vector<Vertex> gone{best};
    for (Vertex w : g.neighbor_list(best))
      if (alive[static_cast<std::size_t>(w)]) gone.push_back(w);
    for (Vertex x : gone) alive[static_cast<std::size_t>(x)] = 0;
    for (Vertex x : gone)
      for (Vertex y : g.neighbor_list(x))
        if (alive[static_cast<std::size_t>(y)]) --deg[static_cast<std::size_t>(y)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// True when G induces exactly the union of the two copies' tree edges.
bool union_is_induced(const Graph& g, const Graph& tree, const Embedding& a, const Embedding& b) {
  std::set<Edge> allowed;
  for (const auto& [u, v] : tree.edges()) {
    for (const auto* e : {&a, &b}) {
      Vertex x = e->map[static_cast<std::size_t>(u)];
      Vertex y = e->map[static_cast<std::size_t>(v)];
      allowed.emplace(std::min(x, y), std::max(x, y));
    }
  }
  std::vector<Vertex> vs = a.map;
  vs.insert(vs.end(), b.map.begin(), b.map.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j]) && !allowed.count({vs[i], vs[j]})) return false;
  return true;
}

}  // namespace

LiftSearchResult find_induced_lift(const Graph& g, const RootedTree& rt, int p, const PipelineConfig& cfg) {
  if (p < 1) throw ParameterError("find_induced_lift: p must be at least 1");
  const int q = cfg.selection_size();
  if (q < p) throw ParameterError("find_induced_lift: q must be at least p");

  LiftSearchResult out;
  const Graph& tree = rt.tree();
  out.stage = "enumerate";
  auto copies = enumerate_tree_embeddings(g, tree, cfg.bad_threshold, cfg.enumeration_budget, true);
  out.tree_copies = copies.count;
  const SearchStatus fail_status = copies.complete ? SearchStatus::absent : SearchStatus::exhausted;
  if (copies.embeddings.empty()) {
    out.status = fail_status;
    out.diagnostic = "no induced copy of T";
    return out;
  }

  std::map<std::vector<Vertex>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < copies.embeddings.size(); ++i) {
    std::vector<Vertex> key;
    for (Vertex r : rt.roots()) key.push_back(copies.embeddings[i].map[static_cast<std::size_t>(r)]);
    groups[key].push_back(i);
  }
  std::vector<const std::vector<std::size_t>*> ranked;
  for (const auto& kv : groups) ranked.push_back(&kv.second);
  std::stable_sort(ranked.begin(), ranked.end(), [](auto* a, auto* b) { return a->size() > b->size(); });
  out.largest_group = ranked.front()->size();

  std::ostringstream diag;
  bool first = true;
  for (const auto* group : ranked) {
    if (group->size() < static_cast<std::size_t>(q)) break;
    out.stage = "select";
    std::vector<std::vector<Value>> vectors;
    for (auto idx : *group) {
      std::vector<Value> v;
      for (Vertex w : rt.non_roots()) v.push_back(copies.embeddings[idx].map[static_cast<std::size_t>(w)]);
      vectors.push_back(std::move(v));
    }
    const auto sel = select_regular(vectors, q);
    if (!sel.success) {
      if (first) diag << "selection failed on a group of " << group->size();
      first = false;
      continue;
    }

    std::vector<const Embedding*> chosen;
    for (auto i : sel.chosen) chosen.push_back(&copies.embeddings[(*group)[i]]);
    std::vector<Vertex> glued;
    if (p > 1 && q > 1) {
      for (std::size_t j = 0; j < sel.verdicts.size(); ++j)
        if (sel.verdicts[j] == PositionVerdict::all_same) glued.push_back(rt.non_roots()[j]);
    }

    out.stage = "conflict";
    std::vector<Edge> conflicts;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (!union_is_induced(g, tree, *chosen[i], *chosen[j])) conflicts.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    const Graph conflict(static_cast<int>(chosen.size()), conflicts);
    const auto indep = greedy_independent_set(conflict);
    if (first) {
      out.conflict_edges = conflict.edge_count();
      out.independent_set = indep.size();
    }
    if (indep.size() < static_cast<std::size_t>(p)) {
      if (first) diag << "independent set of size " << indep.size() << " < p = " << p;
      first = false;
      continue;
    }

    out.stage = "assemble";
    LiftSpec spec{VertexSet(glued), p};
    Lift lifted = lift(rt, spec);
    Embedding emb;
    emb.map.resize(lifted.labels.size());
    for (std::size_t v = 0; v < lifted.labels.size(); ++v) {
      const auto& lab = lifted.labels[v];
      const auto copy = static_cast<std::size_t>(lab.copy == 0 ? 0 : lab.copy - 1);
      emb.map[v] = chosen[static_cast<std::size_t>(indep[copy])]->map[static_cast<std::size_t>(lab.tree_vertex)];
    }
    if (!verify_embedding(g, lifted.graph, emb)) {
      if (first) diag << "assembled lift failed verification";
      first = false;
      continue;
    }
    out.conflict_edges = conflict.edge_count();
    out.independent_set = indep.size();
    out.status = SearchStatus::found;
    out.stage = "done";
    out.lift = std::move(lifted);
    out.embedding = std::move(emb);
    return out;
  }
  if (first) diag << "largest root group has " << out.largest_group << " copies < q = " << q;
  out.status = fail_status;
  out.diagnostic = diag.str();
  return out;
}

}  // namespace indturan
