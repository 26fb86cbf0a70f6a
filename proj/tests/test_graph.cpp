#include "doctest.h"

#include <random>

#include "indturan/errors.hpp"
#include "indturan/generators.hpp"
#include "indturan/graph.hpp"
#include "support/oracles.hpp"

using namespace indturan;

TEST_CASE("common neighborhood examples") {
  const Graph c4 = cycle_graph(4);
  CHECK(common_neighborhood(c4, {0, 2}) == VertexSet{1, 3});
  CHECK(codegree(c4, VertexSet{0, 2}) == 2);
  CHECK(common_neighborhood(complete_graph(4), {0, 1, 2}) == VertexSet{3});
  CHECK(codegree(complete_bipartite(3, 3), VertexSet{0, 1, 2}) == 3);
  CHECK(codegree(Graph(5), VertexSet{1, 3}) == 0);
  CHECK(common_neighborhood(c4, {}) == VertexSet{0, 1, 2, 3});

  const Graph p = prism(5);
  for (Vertex v = 0; v < p.order(); ++v) CHECK(common_neighborhood(p, {v}).ids() == p.neighbor_list(v));
}

TEST_CASE("common neighborhood rejects bad ids") {
  CHECK_THROWS_AS(common_neighborhood(cycle_graph(4), {0, 7}), InputError);
  CHECK_THROWS_AS(codegree(cycle_graph(4), VertexSet{-1}), InputError);
}

TEST_CASE("degree profile examples") {
  auto c4 = degree_profile(cycle_graph(4));
  CHECK(c4.min_degree == 2);
  CHECK(c4.max_degree == 2);
  CHECK(c4.average_degree == 2);

  auto star = degree_profile(star_graph(3));
  CHECK(star.min_degree == 1);
  CHECK(star.max_degree == 3);
  CHECK(star.average_degree == Rational(3, 2));

  auto edge = degree_profile(Graph(2, {{0, 1}}));
  CHECK(edge.min_degree == 1);
  CHECK(edge.max_degree == 1);
  CHECK(edge.average() == 1.0);

  CHECK_THROWS_AS(degree_profile(Graph(0)), InputError);
}

TEST_CASE("almost regular examples") {
  CHECK(is_k_almost_regular(cycle_graph(6), 1));
  CHECK_FALSE(is_k_almost_regular(star_graph(3), 2));
  CHECK(is_k_almost_regular(star_graph(3), 3));
  CHECK_FALSE(is_k_almost_regular(Graph(3, {{0, 1}}), 100));
  CHECK_THROWS_AS(is_k_almost_regular(cycle_graph(4), 0.5), ParameterError);
}

TEST_CASE("graph construction") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  const Graph h = prism(4).induced(std::vector<Vertex>{0, 1, 2, 3});
  CHECK(h == cycle_graph(4));
}

TEST_CASE("graph-core properties on random graphs") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 70);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const oracle::Dense d(g);

    std::size_t deg_sum = 0;
    for (Vertex u = 0; u < n; ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      CHECK(g.degree(u) == d.degree(u));
      deg_sum += static_cast<std::size_t>(g.degree(u));
      for (Vertex v = 0; v < n; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(deg_sum == 2 * g.edge_count());
    CHECK(g.edge_count() == d.edges());

    for (int k = 0; k < 20 && n >= 2; ++k) {
      const Vertex u = static_cast<Vertex>(rng() % n);
      const Vertex v = static_cast<Vertex>(rng() % n);
      if (u == v) continue;
      const auto c = codegree(g, u, v);
      CHECK(c == static_cast<std::size_t>(oracle::codegree(d, u, v)));
      CHECK(c <= static_cast<std::size_t>(std::min(g.degree(u), g.degree(v))));
    }

    // N(S') is inside N(S) ∪ S' for S ⊆ S'.
    if (n >= 4) {
      std::vector<Vertex> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      const VertexSet s({all[0], all[1]});
      const VertexSet big({all[0], all[1], all[2], all[3]});
      const auto ns = common_neighborhood(g, s);
      for (Vertex w : common_neighborhood(g, big)) CHECK((ns.contains(w) || big.contains(w)));
    }

    const auto prof = degree_profile(g);
    CHECK(Rational(prof.min_degree) <= prof.average_degree);
    CHECK(prof.average_degree <= Rational(prof.max_degree));
  }
}

TEST_CASE("vertex set and bitset basics") {
  CHECK_THROWS_AS(VertexSet({1, 1}), InputError);
  const VertexSet s({5, 2, 9});
  CHECK(s.ids() == std::vector<Vertex>{2, 5, 9});
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(4));

  Bitset b(130);
  b.set(3);
  b.set(129);
  CHECK(b.count() == 2);
  CHECK(b.first() == 3);
  CHECK(b.to_vector() == std::vector<Vertex>{3, 129});
  b.reset(3);
  CHECK(b.first() == 129);
}

TEST_CASE("structural predicates") {
  CHECK(is_tree(path_graph(5)));
  CHECK_FALSE(is_tree(cycle_graph(5)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_connected(prism(3)));
  CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
  CHECK(max_codegree(complete_bipartite(2, 4)) == 4);
}
