#include <algorithm>
#include <cmath>
#include <queue>

#include "indturan/algorithms.hpp"
#include "indturan/errors.hpp"

namespace indturan {

namespace {

Bitset bad_bits(const Graph& g, Vertex v, double threshold) {
  Bitset out(static_cast<std::size_t>(g.order()));
  if (threshold == std::numeric_limits<double>::infinity()) return out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    if (static_cast<double>(popcount_and(g.row(u), g.row(v))) >= threshold) out.set(static_cast<std::size_t>(u));
  }
  return out;
}

// Lazily computed X(v) bitsets.
class BadSets {
 public:
  BadSets(const Graph& g, double threshold) : g_(g), threshold_(threshold), cache_(static_cast<std::size_t>(g.order())) {}

  const Bitset& of(Vertex v) {
    auto& slot = cache_[static_cast<std::size_t>(v)];
    if (!slot) slot = bad_bits(g_, v, threshold_);
    return *slot;
  }

 private:
  const Graph& g_;
  double threshold_;
  std::vector<std::optional<Bitset>> cache_;
};

void check_tree(const Graph& tree, const char* who) {
  if (!is_tree(tree)) throw InputError(std::string(who) + ": pattern is not a tree");
}

// Candidate set V_k given the images v_0 .. v_{k-1}.
Bitset candidates(const Graph& g, const TreeOrder& ord, const std::vector<Vertex>& images, std::size_t k, BadSets& bad) {
  const auto parent = static_cast<std::size_t>(ord.attach[k]);
  Bitset cand = g.neighbors(images[parent]);
  for (std::size_t i = 0; i < k; ++i) {
    cand.and_not(bad.of(images[i]));
    cand.reset(static_cast<std::size_t>(images[i]));
    if (i != parent) cand.and_not(g.row(images[i]));
  }
  return cand;
}

void check_threshold(double threshold, const char* who) {
  if (std::isnan(threshold) || threshold < 0) throw ParameterError(std::string(who) + ": threshold must be >= 0");
}

}  // namespace

VertexSet bad_neighbor_set(const Graph& g, Vertex v, double threshold) {
  check_threshold(threshold, "bad_neighbor_set");
  if (!g.valid_vertex(v)) throw InputError("bad_neighbor_set: vertex out of range");
  return VertexSet(bad_bits(g, v, threshold).to_vector());
}

double supersaturation_threshold(const Graph& g, int s) {
  if (s < 1) throw ParameterError("supersaturation_threshold: s must be at least 1");
  const double d = degree_profile(g).average();
  return std::pow(d, 1.0 - 1.0 / (3.0 * s));
}

TreeOrder bfs_leaf_order(const Graph& tree, Vertex start) {
  check_tree(tree, "bfs_leaf_order");
  if (!tree.valid_vertex(start)) throw InputError("bfs_leaf_order: start vertex out of range");
  TreeOrder out;
  std::vector<int> position(static_cast<std::size_t>(tree.order()), -1);
  std::queue<Vertex> frontier;
  frontier.push(start);
  position[static_cast<std::size_t>(start)] = 0;
  out.order.push_back(start);
  out.attach.push_back(-1);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : tree.neighbor_list(v)) {
      if (position[static_cast<std::size_t>(w)] >= 0) continue;
      position[static_cast<std::size_t>(w)] = static_cast<int>(out.order.size());
      out.order.push_back(w);
      out.attach.push_back(position[static_cast<std::size_t>(v)]);
      frontier.push(w);
    }
  }
  return out;
}

GreedyEmbedResult greedy_tree_embed(const Graph& g, const Graph& tree, double threshold, std::uint64_t seed) {
  check_threshold(threshold, "greedy_tree_embed");
  GreedyEmbedResult out;
  out.order = bfs_leaf_order(tree);
  const auto& ord = out.order;
  if (g.order() == 0) {
    out.failed_step = 0;
    return out;
  }
  auto rng = make_rng(seed, 0x6772);
  BadSets bad(g, threshold);
  std::vector<Vertex> images;
  images.push_back(static_cast<Vertex>(std::uniform_int_distribution<int>(0, g.order() - 1)(rng)));
  for (std::size_t k = 1; k < ord.order.size(); ++k) {
    const auto cand = candidates(g, ord, images, k, bad).to_vector();
    out.candidate_sizes.push_back(cand.size());
    if (cand.empty()) {
      out.failed_step = static_cast<int>(k);
      return out;
    }
    std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
    images.push_back(cand[pick(rng)]);
  }
  Embedding e;
  e.map.assign(static_cast<std::size_t>(tree.order()), -1);
  for (std::size_t k = 0; k < images.size(); ++k) e.map[static_cast<std::size_t>(ord.order[k])] = images[k];
  out.embedding = std::move(e);
  return out;
}

TreeEnumeration enumerate_tree_embeddings(const Graph& g, const Graph& tree, double threshold, Budget budget,
                                          bool collect) {
  check_threshold(threshold, "enumerate_tree_embeddings");
  const auto ord = bfs_leaf_order(tree);
  TreeEnumeration out;
  BadSets bad(g, threshold);
  std::vector<Vertex> images;
  const std::size_t t = ord.order.size();

  auto emit = [&]() {
    ++out.count;
    if (!collect) return;
    Embedding e;
    e.map.assign(t, -1);
    for (std::size_t k = 0; k < t; ++k) e.map[static_cast<std::size_t>(ord.order[k])] = images[k];
    out.embeddings.push_back(std::move(e));
  };

  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == t) {
      emit();
      return true;
    }
    const auto cand = candidates(g, ord, images, k, bad);
    bool go = true;
    cand.for_each([&](Vertex v) {
      if (!go) return;
      if (budget && out.nodes >= *budget) {
        out.complete = false;
        go = false;
        return;
      }
      ++out.nodes;
      images.push_back(v);
      go = self(self, k + 1);
      images.pop_back();
    });
    return go;
  };

  for (Vertex v = 0; v < g.order(); ++v) {
    if (budget && out.nodes >= *budget) {
      out.complete = false;
      break;
    }
    ++out.nodes;
    images.assign(1, v);
    if (!dfs(dfs, 1)) break;
  }
  return out;
}

SupersaturationHypothesis tree_supersaturation_hypothesis(const Graph& g, double k, int s, int t) {
  if (k < 1 || s < 1 || t < 1) throw ParameterError("tree_supersaturation_hypothesis: K, s, t must be positive");
  SupersaturationHypothesis h;
  if (g.order() == 0) return h;
  h.average_degree = degree_profile(g).average();
  h.required_degree = std::pow(4.0 * k * t, 6.0 * s) * std::pow(static_cast<double>(s), 3.0);
  h.degree_large = h.average_degree >= h.required_degree;
  h.almost_regular = is_k_almost_regular(g, k);
  h.kss_free = !find_biclique(g, s).has_value();
  return h;
}

}  // namespace indturan
