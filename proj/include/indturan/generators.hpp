#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indturan/graph.hpp"

namespace indturan {

// Small named graphs used throughout the tests and the CLI.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // side a is 0..a-1
Graph star_graph(int leaves);            // center 0

struct ThetaGraph {
  Graph graph;
  Vertex source = 0;
  Vertex sink = 1;
  // Each path lists source, the l-1 interior vertices, then sink.
  std::vector<std::vector<Vertex>> paths;
};

// t internally disjoint paths with l edges each between two terminals.
// Vertex 0 and 1 are the terminals; path i has interior 2+(l-1)i .. 1+(l-1)(i+1).
ThetaGraph theta(int length, int paths);

// Two l-cycles (0..l-1 and l..2l-1) joined by the matching i -- i+l.
Graph prism(int length);

// A tree with an independent, proper, nonempty root set.
class RootedTree {
 public:
  RootedTree(Graph tree, VertexSet roots, std::vector<std::string> names = {});

  const Graph& tree() const { return tree_; }
  const VertexSet& roots() const { return roots_; }
  const VertexSet& non_roots() const { return non_roots_; }
  int order() const { return tree_.order(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(Vertex v) const;

 private:
  Graph tree_;
  VertexSet roots_;
  VertexSet non_roots_;
  std::vector<std::string> names_;
};

// The 4-edge path a-b-c-d-e rooted at both ends (vertices 0..4 = a..e).
RootedTree rooted_path_example();

struct LiftSpec {
  VertexSet glued;  // S: non-roots shared by every copy
  int copies = 1;   // p
};

// Throws InputError unless S is a proper subset of the non-roots and p >= 1.
void validate_lift_spec(const RootedTree& rt, const LiftSpec& spec);

struct LiftLabel {
  Vertex tree_vertex = 0;
  int copy = 0;  // 0 for vertices of R ∪ S (shared), otherwise 1..p
};

struct Lift {
  Graph graph;
  std::vector<LiftLabel> labels;  // indexed by lift vertex
  LiftSpec spec;

  // Lift vertex standing for `copy` (1-based) of `tree_vertex`.
  Vertex vertex_of(Vertex tree_vertex, int copy) const;
};

// p copies of T glued along R ∪ S.
Lift lift(const RootedTree& rt, const LiftSpec& spec);

struct LiftFamilyEntry {
  LiftSpec spec;
  Lift lift;
};

// One entry per proper subset S of the non-roots, ordered by the bitmask of S
// over non_roots(). With `dedup`, later entries isomorphic to an earlier one
// are dropped.
std::vector<LiftFamilyEntry> lift_family(const RootedTree& rt, int copies, bool dedup = false);

// e(T) / |V \ R|.
Rational density(const RootedTree& rt);

struct Blowup {
  Graph graph;
  std::vector<Vertex> blob_of;  // base vertex of each blown-up vertex
};

// Each base vertex becomes a t-clique (vertices v*t .. v*t+t-1); base edges
// become complete t x t joins.
Blowup clique_blowup(const Graph& base, int t);

// Orthogonality graph of the projective plane over GF(q), q prime.
// C4-free with q^2+q+1 vertices and q(q+1)^2/2 edges.
Graph polarity_graph(int q);

bool is_prime(int q);

// G(n, p) with a fixed seed.
Graph erdos_renyi(int n, double p, std::uint64_t seed);
// Uniform random recursive tree on t vertices with shuffled labels.
Graph random_tree(int t, std::uint64_t seed);

}  // namespace indturan
