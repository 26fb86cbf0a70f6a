#include "doctest.h"

#include <cmath>
#include <random>

#include "indturan/algorithms.hpp"
#include "indturan/counters.hpp"
#include "indturan/detectors.hpp"
#include "indturan/errors.hpp"
#include "indturan/generators.hpp"
#include "indturan/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace indturan;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Dense core on `core` vertices with a sparse fringe hanging off it.
Graph planted_core(int core, int fringe, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::bernoulli_distribution coin(0.7);
  std::vector<Edge> e;
  for (int u = 0; u < core; ++u)
    for (int v = u + 1; v < core; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  for (int f = 0; f < fringe; ++f) e.emplace_back(core + f, static_cast<int>(rng() % core));
  return Graph(core + fringe, e);
}

}  // namespace

TEST_CASE("almost_regularize on a regular graph stops at once") {
  const Graph g = complete_bipartite(32, 32);
  const auto r = almost_regularize(g, 0.5, 1.0, 16, 1);
  REQUIRE(r.success());
  CHECK(r.iterations == 0);
  CHECK(r.vertices.size() == 64);
  CHECK(r.k_prime == doctest::Approx(256));
  CHECK(r.k_bound == doctest::Approx(1024));
  CHECK(is_k_almost_regular(r.subgraph, r.k_bound));
  const double m = static_cast<double>(r.subgraph.order());
  CHECK(static_cast<double>(r.subgraph.edge_count()) >= 0.25 * std::pow(m, 1.5));
}

TEST_CASE("almost_regularize hypothesis gate") {
  const auto r = almost_regularize(cycle_graph(20), 0.5, 1.0, 4, 1);
  CHECK(r.status == RegularizationStatus::hypothesis_failure);
  CHECK_FALSE(r.diagnostic.empty());
  CHECK_THROWS_AS(almost_regularize(cycle_graph(5), 1.5, 1.0, 4, 1), ParameterError);
  CHECK_THROWS_AS(almost_regularize(cycle_graph(5), 0.5, 0.0, 4, 1), ParameterError);
  CHECK_THROWS_AS(almost_regularize(cycle_graph(5), 0.5, 1.0, 0, 1), ParameterError);
}

TEST_CASE("almost_regularize success is always almost regular") {
  int successes = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = seed % 2 ? planted_core(40, 60, seed) : erdos_renyi(60, 0.5, seed);
    for (double alpha : {0.3, 0.5, 0.7}) {
      const auto r = almost_regularize(g, alpha, 0.5, 8, seed);
      if (!r.success()) {
        CHECK_FALSE(r.diagnostic.empty());
        continue;
      }
      ++successes;
      CHECK(is_k_almost_regular(r.subgraph, r.k_bound));
      CHECK(r.subgraph == g.induced(r.vertices.ids()));
      const double m = static_cast<double>(r.subgraph.order());
      CHECK(static_cast<double>(r.subgraph.edge_count()) >= 0.5 / 4 * std::pow(m, 1 + alpha));
      CHECK(r.log.size() == static_cast<std::size_t>(r.iterations + 1));
    }
  }
  CHECK(successes > 0);
  const auto a = almost_regularize(planted_core(40, 60, 3), 0.5, 0.5, 8, 99);
  const auto b = almost_regularize(planted_core(40, 60, 3), 0.5, 0.5, 8, 99);
  CHECK(a.vertices == b.vertices);
}

TEST_CASE("bad neighbor set examples") {
  const Graph c6 = cycle_graph(6);
  for (Vertex v = 0; v < 6; ++v) CHECK(bad_neighbor_set(c6, v, 2).empty());
  CHECK(bad_neighbor_set(c6, 2, 0) == VertexSet{0, 1, 3, 4, 5});
  const Graph k24 = complete_bipartite(2, 4);
  CHECK(bad_neighbor_set(k24, 0, 4) == VertexSet{1});
  CHECK_THROWS_AS(bad_neighbor_set(c6, 0, -1), ParameterError);

  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = oracle::random_graph(12, 0.5, rng);
    const oracle::Dense d(g);
    const Vertex v = static_cast<Vertex>(rng() % 12);
    const double thr = static_cast<double>(rng() % 5);
    std::vector<Vertex> want;
    for (Vertex u = 0; u < 12; ++u)
      if (u != v && oracle::codegree(d, u, v) >= thr) want.push_back(u);
    CHECK(bad_neighbor_set(g, v, thr).ids() == want);
  }
}

TEST_CASE("bfs leaf order prefix property") {
  const auto path = bfs_leaf_order(path_graph(3));
  CHECK(path.order == std::vector<Vertex>{0, 1, 2});
  const auto star = bfs_leaf_order(star_graph(3));
  CHECK(star.order.front() == 0);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int t = 1 + static_cast<int>(seed % 12);
    const Graph tree = random_tree(t, seed);
    const auto ord = bfs_leaf_order(tree);
    REQUIRE(ord.order.size() == static_cast<std::size_t>(t));
    CHECK(ord.attach[0] == -1);
    for (int k = 1; k <= t; ++k) {
      std::vector<Vertex> prefix(ord.order.begin(), ord.order.begin() + k);
      const Graph sub = tree.induced(prefix);
      CHECK(is_tree(sub));
      if (k > 1) {
        CHECK(sub.degree(k - 1) == 1);
        CHECK(tree.adjacent(ord.order[k - 1], ord.order[ord.attach[k - 1]]));
      }
    }
  }
  CHECK_THROWS_AS(bfs_leaf_order(cycle_graph(4)), InputError);
}

TEST_CASE("greedy tree embed examples") {
  const Graph edge(2, {{0, 1}});
  const Graph p = prism(5);
  const auto e1 = greedy_tree_embed(p, edge, kInf, 1);
  REQUIRE(e1.embedding.has_value());
  CHECK(p.adjacent(e1.embedding->map[0], e1.embedding->map[1]));

  const auto c6 = greedy_tree_embed(cycle_graph(6), path_graph(3), kInf, 1);
  REQUIRE(c6.embedding.has_value());
  CHECK(verify_embedding(cycle_graph(6), path_graph(3), *c6.embedding));

  const auto k4 = greedy_tree_embed(complete_graph(4), path_graph(3), kInf, 1);
  CHECK_FALSE(k4.embedding.has_value());
  CHECK(k4.failed_step >= 0);

  CHECK_THROWS_AS(greedy_tree_embed(p, cycle_graph(3), kInf, 1), InputError);
}

TEST_CASE("greedy tree embed is sound") {
  std::mt19937_64 rng(73);
  int successes = 0;
  for (int rep = 0; rep < 150; ++rep) {
    const Graph g = oracle::random_graph(8 + static_cast<int>(rng() % 20), 0.25, rng);
    const Graph tree = random_tree(2 + static_cast<int>(rng() % 6), rng());
    const double thr = rep % 3 == 0 ? kInf : static_cast<double>(1 + rng() % 4);
    const auto r = greedy_tree_embed(g, tree, thr, rng());
    if (r.embedding) {
      ++successes;
      CHECK(verify_embedding(g, tree, *r.embedding));
    }
  }
  CHECK(successes > 0);
}

TEST_CASE("tree enumeration examples and bounds") {
  const Graph p = prism(5);
  const Graph edge(2, {{0, 1}});
  CHECK(enumerate_tree_embeddings(p, edge, kInf, std::nullopt).count == 2 * p.edge_count());

  std::mt19937_64 rng(79);
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = oracle::random_graph(6 + static_cast<int>(rng() % 5), 0.4, rng);
    const Graph tree = random_tree(1 + static_cast<int>(rng() % 5), rng());
    const double thr = rep % 2 ? kInf : 2.0;
    const auto en = enumerate_tree_embeddings(g, tree, thr, std::nullopt, true);
    const auto want = oracle::labeled_induced(oracle::Dense(g), oracle::Dense(tree));
    CHECK(en.complete);
    CHECK(en.count <= want);
    CHECK(en.embeddings.size() == en.count);
    std::set<std::vector<Vertex>> distinct;
    for (const auto& e : en.embeddings) {
      CHECK(verify_embedding(g, tree, e));
      distinct.insert(e.map);
    }
    CHECK(distinct.size() == en.embeddings.size());
    if (thr > static_cast<double>(max_codegree(g)) && tree.order() <= 3) CHECK(en.count == want);
  }
  const auto starved = enumerate_tree_embeddings(polarity_graph(5), path_graph(5), kInf, 10);
  CHECK_FALSE(starved.complete);
}

TEST_CASE("supersaturation hypothesis is vacuous at small scale") {
  const auto h = tree_supersaturation_hypothesis(polarity_graph(5), 2, 2, 3);
  CHECK(h.almost_regular);
  CHECK(h.kss_free);
  CHECK_FALSE(h.degree_large);
  CHECK_FALSE(h.holds());
  CHECK(h.required_degree > 1e6);
  CHECK(supersaturation_threshold(cycle_graph(6), 1) == doctest::Approx(std::pow(2.0, 2.0 / 3.0)));
}

TEST_CASE("selection threshold") {
  CHECK(selection_threshold(1, 2) == 4);
  CHECK(selection_threshold(2, 2) == 32);
  CHECK(selection_threshold(2, 3) == 108);
  CHECK(selection_threshold(3, 2) == 576);
  CHECK_THROWS_AS(selection_threshold(2, 0), ParameterError);
}

TEST_CASE("select_regular examples") {
  const std::vector<std::vector<Value>> same(32, {1, 2});
  const auto r = select_regular(same, 2);
  REQUIRE(r.success);
  CHECK(r.chosen.size() == 2);
  CHECK(r.verdicts == std::vector<PositionVerdict>{PositionVerdict::all_same, PositionVerdict::all_same});
  CHECK(r.value_sets == std::vector<std::vector<Value>>{{1}, {2}});

  const std::vector<std::vector<Value>> base = {{1}, {1}, {2}, {3}};
  const auto b = select_regular(base, 2);
  REQUIRE(b.success);
  const bool ones = b.chosen == std::vector<std::size_t>{0, 1};
  const bool spread = b.chosen == std::vector<std::size_t>{2, 3};
  CHECK((ones || spread));

  CHECK_THROWS_AS(select_regular({{1, 2}, {3}}, 2), InputError);
  CHECK_THROWS_AS(select_regular({{1, 1}}, 2), InputError);
  CHECK_THROWS_AS(select_regular(same, 0), ParameterError);
}

TEST_CASE("select_regular random instances") {
  std::mt19937_64 rng(83);
  for (auto [t, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const auto n = selection_threshold(t, q).convert_to<std::size_t>();
    for (int rep = 0; rep < 40; ++rep) {
      const Value range = 2 + static_cast<Value>(rng() % 12);
      std::vector<std::vector<Value>> vs;
      while (vs.size() < n) {
        std::vector<Value> v;
        while (v.size() < static_cast<std::size_t>(t)) {
          const Value x = static_cast<Value>(rng() % (range + t));
          if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
        }
        vs.push_back(v);
      }
      const auto r = select_regular(vs, q);
      CHECK_FALSE(r.below_guarantee);
      REQUIRE(r.success);
      CHECK(r.chosen.size() == static_cast<std::size_t>(q));
      CHECK(oracle::regular_selection(vs, r.chosen));
      CHECK(selection_is_regular(vs, r.chosen));
    }
  }
}

TEST_CASE("select_regular below the guarantee") {
  // Every pair shares a value somewhere and no pair agrees everywhere.
  const std::vector<std::vector<Value>> hard = {{1, 2}, {1, 3}, {4, 2}};
  const auto r = select_regular(hard, 2);
  CHECK(r.below_guarantee);
  if (r.success) CHECK(oracle::regular_selection(hard, r.chosen));

  const std::vector<std::vector<Value>> easy = {{1, 2}, {3, 4}};
  const auto e = select_regular(easy, 2);
  CHECK(e.below_guarantee);
  REQUIRE(e.success);
  CHECK(oracle::regular_selection(easy, e.chosen));
}

TEST_CASE("greedy independent set bound") {
  std::mt19937_64 rng(89);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 40), 0.3, rng);
    const auto is = greedy_independent_set(g);
    for (std::size_t i = 0; i < is.size(); ++i)
      for (std::size_t j = i + 1; j < is.size(); ++j) CHECK_FALSE(g.adjacent(is[i], is[j]));
    const double n = g.order();
    CHECK(static_cast<double>(is.size()) >= n * n / (2.0 * static_cast<double>(g.edge_count()) + n) - 1e-9);
  }
}

TEST_CASE("lift search self-detection") {
  const auto rt = rooted_path_example();
  for (int p = 1; p <= 3; ++p) {
    for (const auto& entry : lift_family(rt, p, true)) {
      PipelineConfig cfg;
      cfg.p = p;
      const auto r = find_induced_lift(entry.lift.graph, rt, p, cfg);
      REQUIRE(r.status == SearchStatus::found);
      REQUIRE(r.lift.has_value());
      CHECK(verify_embedding(entry.lift.graph, r.lift->graph, *r.embedding));
      bool member = false;
      for (const auto& f : lift_family(rt, p)) member = member || are_isomorphic(f.lift.graph, r.lift->graph);
      CHECK(member);
      if (p == 1) CHECK(are_isomorphic(r.lift->graph, rt.tree()));
    }
  }
}

TEST_CASE("lift search on random C4-free hosts is sound") {
  const RootedTree cherry(path_graph(3), {0, 2});
  for (int q : {3, 5, 7}) {
    const Graph g = polarity_graph(q);
    PipelineConfig cfg;
    const auto r = find_induced_lift(g, cherry, 2, cfg);
    if (r.status == SearchStatus::found) CHECK(verify_embedding(g, r.lift->graph, *r.embedding));
  }
  const auto none = find_induced_lift(complete_graph(6), rooted_path_example(), 2, PipelineConfig{});
  CHECK(none.status == SearchStatus::absent);
  PipelineConfig bad;
  bad.q = 1;
  CHECK_THROWS_AS(find_induced_lift(cycle_graph(6), rooted_path_example(), 2, bad), ParameterError);
}

TEST_CASE("theta search examples") {
  PipelineConfig cfg;
  for (int l = 2; l <= 4; ++l)
    for (int t = 2; t <= 4; ++t) {
      const auto th = theta(l, t);
      const auto r = find_induced_theta(th.graph, l, t, cfg);
      REQUIRE(r.found());
      CHECK(verify_embedding(th.graph, th.graph, *r.witness));
    }
  const auto c8 = find_induced_theta(cycle_graph(8), 4, 2, cfg);
  CHECK(c8.found());
  const auto k23 = find_induced_theta(complete_bipartite(2, 3), 2, 3, cfg);
  CHECK(k23.found());
  const auto none = find_induced_theta(cycle_graph(7), 3, 2, cfg);
  CHECK(none.status == SearchStatus::absent);
  CHECK_THROWS_AS(find_induced_theta(cycle_graph(6), 1, 2, cfg), ParameterError);
}

TEST_CASE("theta search agrees with brute force on small graphs") {
  std::mt19937_64 rng(97);
  PipelineConfig cfg;
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = oracle::random_graph(6 + static_cast<int>(rng() % 5), 0.35, rng);
    const int l = 2 + rep % 2;
    const int t = 2 + (rep / 2) % 2;
    const auto pattern = theta(l, t).graph;
    if (pattern.order() > g.order()) continue;
    const auto r = find_induced_theta(g, l, t, cfg);
    const auto brute = find_induced(g, pattern);
    CHECK(r.found() == brute.found());
    if (r.found()) CHECK(verify_embedding(g, pattern, *r.witness));
  }
}

TEST_CASE("rich set examples") {
  const Graph k3m = complete_bipartite(3, 12);
  const auto r = find_rich_set(k3m, 1.0, 3, 5, 50, 1);
  REQUIRE(r.set.has_value());
  CHECK(r.set->size() >= 5);
  for (Vertex v : *r.set) CHECK(v >= 3);
  CHECK(rich_set_audit(k3m, *r.set, 3));
  CHECK(r.audit.certified);

  const auto none = find_rich_set(cycle_graph(6), 1.0, 1, 2, 10, 1);
  CHECK_FALSE(none.set.has_value());
  CHECK_FALSE(rich_set_audit(k3m, {0, 1, 3}, 1));
  CHECK_THROWS_AS(find_rich_set(k3m, 0, 3, 5, 5, 1), ParameterError);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = erdos_renyi(30, 0.6, seed);
    const auto x = find_rich_set(g, 4.0, 3, 3, 30, seed);
    if (x.set) CHECK(rich_set_audit(g, *x.set, 3));
  }
}

TEST_CASE("gamma cycle classification") {
  const Graph cube = prism(4);
  std::vector<Edge> rungs;
  for (int i = 0; i < 4; ++i) rungs.emplace_back(i, i + 4);
  CHECK(classify_gamma_cycle(cube, rungs) == GammaCycleClass::induced);
  CHECK_THROWS_AS(classify_gamma_cycle(cube, {{0, 4}, {1, 5}}), InputError);
  CHECK_THROWS_AS(classify_gamma_cycle(cube, {{0, 4}, {2, 6}, {1, 5}, {3, 7}}), InputError);

  // Möbius ladder on 8 vertices: rungs i -- i+4 of the 8-cycle.
  const Graph mobius(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const std::vector<Edge> twist = {{0, 4}, {1, 5}, {2, 6}, {3, 7}};
  CHECK(classify_gamma_cycle(mobius, twist) == GammaCycleClass::twisted);

  const Graph p8 = prism(8);
  std::vector<Edge> long_rungs;
  for (int i = 0; i < 8; ++i) long_rungs.emplace_back(i, i + 8);
  CHECK(classify_gamma_cycle(p8, long_rungs) == GammaCycleClass::induced);

  // Extra chord between opposite rungs turns the cycle special.
  auto chorded = p8.edges();
  chorded.emplace_back(0, 4);
  CHECK(classify_gamma_cycle(Graph(16, chorded), long_rungs) == GammaCycleClass::special);
  auto crossing = p8.edges();
  crossing.emplace_back(1, 3);
  CHECK(classify_gamma_cycle(Graph(16, crossing), long_rungs) == GammaCycleClass::typical);
}

TEST_CASE("prism search examples") {
  PipelineConfig cfg;
  for (int l = 2; l <= 4; ++l) {
    const Graph g = prism(2 * l);
    const auto r = find_induced_prism(g, l, cfg);
    REQUIRE(r.found());
    CHECK(verify_embedding(g, g, *r.witness));
  }
  CHECK(find_induced_prism(cycle_graph(6), 3, cfg).status == SearchStatus::absent);
  CHECK(find_induced_prism(complete_bipartite(3, 3), 2, cfg).status == SearchStatus::absent);
  CHECK_THROWS_AS(find_induced_prism(cycle_graph(6), 1, cfg), ParameterError);
}

TEST_CASE("prism search is sound on random hosts") {
  PipelineConfig cfg;
  cfg.thin_threshold = 1e9;
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = oracle::random_graph(10 + static_cast<int>(rng() % 8), 0.3, rng);
    const auto r = find_induced_prism(g, 2, cfg);
    if (r.found()) CHECK(verify_embedding(g, prism(4), *r.witness));
    if (r.status == SearchStatus::absent) CHECK_FALSE(find_induced(g, prism(4)).found());
  }
}
