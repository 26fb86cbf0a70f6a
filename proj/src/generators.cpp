#include "indturan/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "indturan/errors.hpp"
#include "indturan/isomorphism.hpp"

namespace indturan {

Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path_graph(int n) {
  if (n < 1) throw ParameterError("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

ThetaGraph theta(int length, int paths) {
  if (length < 2) throw ParameterError("theta: path length must be at least 2");
  if (paths < 2) throw ParameterError("theta: need at least 2 paths");
  ThetaGraph out;
  const int n = 2 + (length - 1) * paths;
  std::vector<Edge> e;
  for (int i = 0; i < paths; ++i) {
    std::vector<Vertex> p{0};
    for (int j = 0; j < length - 1; ++j) p.push_back(2 + (length - 1) * i + j);
    p.push_back(1);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) e.emplace_back(p[k], p[k + 1]);
    out.paths.push_back(std::move(p));
  }
  out.graph = Graph(n, e);
  return out;
}

Graph prism(int length) {
  if (length < 3) throw ParameterError("prism: cycle length must be at least 3");
  std::vector<Edge> e;
  for (int i = 0; i < length; ++i) {
    const int j = (i + 1) % length;
    e.emplace_back(i, j);
    e.emplace_back(length + i, length + j);
    e.emplace_back(i, length + i);
  }
  return Graph(2 * length, e);
}

RootedTree::RootedTree(Graph tree, VertexSet roots, std::vector<std::string> names)
    : tree_(std::move(tree)), roots_(std::move(roots)), names_(std::move(names)) {
  if (!is_tree(tree_)) throw InputError("rooted tree: graph is not a tree");
  for (Vertex r : roots_) {
    if (!tree_.valid_vertex(r)) throw InputError("rooted tree: root id out of range");
  }
  if (roots_.empty()) throw InputError("rooted tree: need at least one root");
  if (roots_.size() >= static_cast<std::size_t>(tree_.order())) {
    throw InputError("rooted tree: need at least one non-root vertex");
  }
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = i + 1; j < roots_.size(); ++j)
      if (tree_.adjacent(roots_[i], roots_[j])) throw InputError("rooted tree: roots must be independent");
  if (!names_.empty() && names_.size() != static_cast<std::size_t>(tree_.order())) {
    throw InputError("rooted tree: one name per vertex required");
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < tree_.order(); ++v)
    if (!roots_.contains(v)) rest.push_back(v);
  non_roots_ = VertexSet(std::move(rest));
}

std::string RootedTree::name(Vertex v) const {
  return names_.empty() ? std::to_string(v) : names_[static_cast<std::size_t>(v)];
}

RootedTree rooted_path_example() {
  return RootedTree(path_graph(5), VertexSet{0, 4}, {"a", "b", "c", "d", "e"});
}

void validate_lift_spec(const RootedTree& rt, const LiftSpec& spec) {
  if (spec.copies < 1) throw ParameterError("lift: p must be at least 1");
  for (Vertex v : spec.glued) {
    if (!rt.non_roots().contains(v)) throw InputError("lift: S must consist of non-root vertices");
  }
  if (spec.glued.size() >= rt.non_roots().size()) throw InputError("lift: S must be a proper subset of the non-roots");
}

Vertex Lift::vertex_of(Vertex tree_vertex, int copy) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& l = labels[i];
    if (l.tree_vertex == tree_vertex && (l.copy == 0 || l.copy == copy)) return static_cast<Vertex>(i);
  }
  throw InputError("lift: no vertex for requested label");
}

Lift lift(const RootedTree& rt, const LiftSpec& spec) {
  validate_lift_spec(rt, spec);
  const Graph& t = rt.tree();
  const int p = spec.copies;
  auto shared = [&](Vertex v) { return rt.roots().contains(v) || spec.glued.contains(v); };

  Lift out;
  out.spec = spec;
  // first[v] = first lift vertex of tree vertex v; copies are consecutive.
  std::vector<Vertex> first(static_cast<std::size_t>(t.order()));
  for (Vertex v = 0; v < t.order(); ++v) {
    first[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.labels.size());
    if (shared(v)) {
      out.labels.push_back({v, 0});
    } else {
      for (int c = 1; c <= p; ++c) out.labels.push_back({v, c});
    }
  }
  auto at = [&](Vertex v, int c) { return shared(v) ? first[static_cast<std::size_t>(v)] : first[static_cast<std::size_t>(v)] + c - 1; };
  std::vector<Edge> e;
  for (auto [u, v] : t.edges()) {
    for (int c = 1; c <= p; ++c) e.emplace_back(at(u, c), at(v, c));
  }
  out.graph = Graph(static_cast<int>(out.labels.size()), e);
  return out;
}

std::vector<LiftFamilyEntry> lift_family(const RootedTree& rt, int copies, bool dedup) {
  if (copies < 1) throw ParameterError("lift family: p must be at least 1");
  const auto& free_vertices = rt.non_roots();
  const std::size_t a = free_vertices.size();
  if (a >= 31) throw ParameterError("lift family: too many non-root vertices to enumerate");
  std::vector<LiftFamilyEntry> out;
  std::set<CanonicalForm> seen;
  const std::uint32_t full = (std::uint32_t{1} << a) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < a; ++i)
      if (mask >> i & 1U) s.push_back(free_vertices[i]);
    LiftSpec spec{VertexSet(std::move(s)), copies};
    Lift l = lift(rt, spec);
    if (dedup && !seen.insert(canonical_form(l.graph)).second) continue;
    out.push_back({std::move(spec), std::move(l)});
  }
  return out;
}

Rational density(const RootedTree& rt) {
  return Rational(static_cast<long long>(rt.tree().edge_count()), static_cast<long long>(rt.non_roots().size()));
}

Blowup clique_blowup(const Graph& base, int t) {
  if (t < 1) throw ParameterError("clique blowup: t must be at least 1");
  Blowup out;
  const int n = base.order() * t;
  out.blob_of.resize(static_cast<std::size_t>(n));
  std::vector<Edge> e;
  for (Vertex v = 0; v < base.order(); ++v) {
    for (int i = 0; i < t; ++i) {
      out.blob_of[static_cast<std::size_t>(v * t + i)] = v;
      for (int j = i + 1; j < t; ++j) e.emplace_back(v * t + i, v * t + j);
    }
  }
  for (auto [u, v] : base.edges()) {
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) e.emplace_back(u * t + i, v * t + j);
  }
  out.graph = Graph(n, e);
  return out;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Graph polarity_graph(int q) {
  if (!is_prime(q)) throw ParameterError("polarity graph: q must be prime");
  // Normalised representatives: first nonzero coordinate equals 1.
  std::vector<std::array<int, 3>> points;
  points.push_back({0, 0, 1});
  for (int b = 0; b < q; ++b) points.push_back({0, 1, b});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) points.push_back({1, a, b});
  const int n = static_cast<int>(points.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& x = points[static_cast<std::size_t>(i)];
      const auto& y = points[static_cast<std::size_t>(j)];
      if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw ParameterError("erdos_renyi: need n >= 0 and p in [0, 1]");
  auto rng = make_rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph random_tree(int t, std::uint64_t seed) {
  if (t < 1) throw ParameterError("random_tree: need at least one vertex");
  auto rng = make_rng(seed);
  std::vector<Vertex> label(static_cast<std::size_t>(t));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> e;
  for (int i = 1; i < t; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    e.emplace_back(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(pick(rng))]);
  }
  return Graph(t, e);
}

}  // namespace indturan
