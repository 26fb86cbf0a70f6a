#include "indturan/detectors.hpp"

#include <algorithm>
#include <numeric>

#include "indturan/errors.hpp"

namespace indturan {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::absent:
      return "absent";
    case SearchStatus::exhausted:
      return "exhausted";
  }
  return "unknown";
}

namespace {

class BicliqueSearch {
 public:
  BicliqueSearch(const Graph& g, int s) : g_(g), s_(static_cast<std::size_t>(s)) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) >= s) candidates_.push_back(v);
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  std::optional<BicliqueCertificate> run() {
    Bitset all(static_cast<std::size_t>(g_.order()), true);
    if (dfs(0, all)) return result_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t from, const Bitset& common) {
    if (chosen_.size() == s_) {
      std::vector<Vertex> b;
      common.for_each([&](Vertex v) {
        if (b.size() < s_) b.push_back(v);
      });
      result_ = BicliqueCertificate{VertexSet(chosen_), VertexSet(std::move(b))};
      return true;
    }
    const std::size_t need = s_ - chosen_.size();
    for (std::size_t i = from; i + need <= candidates_.size(); ++i) {
      const Vertex v = candidates_[i];
      if (popcount_and(common.words(), g_.row(v)) < s_) continue;
      Bitset next = common;
      next &= g_.row(v);
      chosen_.push_back(v);
      if (dfs(i + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t s_;
  std::vector<Vertex> candidates_;
  std::vector<Vertex> chosen_;
  BicliqueCertificate result_;
};

class InducedMatcher {
 public:
  InducedMatcher(const Graph& g, const Graph& h, const EmbeddingVisitor& visit, Budget budget)
      : g_(g), h_(h), visit_(visit), budget_(budget) {
    const int k = h.order();
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    std::vector<int> placed_neighbours(static_cast<std::size_t>(k), 0);
    for (int step = 0; step < k; ++step) {
      Vertex best = -1;
      for (Vertex u = 0; u < k; ++u) {
        if (placed[static_cast<std::size_t>(u)]) continue;
        if (best < 0 || std::tie(placed_neighbours[static_cast<std::size_t>(u)], h.degrees()[static_cast<std::size_t>(u)]) >
                            std::tie(placed_neighbours[static_cast<std::size_t>(best)], h.degrees()[static_cast<std::size_t>(best)])) {
          best = u;
        }
      }
      order_.push_back(best);
      placed[static_cast<std::size_t>(best)] = 1;
      for (Vertex w : h.neighbor_list(best)) ++placed_neighbours[static_cast<std::size_t>(w)];
    }
    map_.assign(static_cast<std::size_t>(k), -1);
    used_ = Bitset(static_cast<std::size_t>(g.order()));
  }

  MatchStats run() {
    if (h_.order() > g_.order()) return stats_;
    dfs(0);
    return stats_;
  }

 private:
  // Returns false when the search must stop (visitor or budget).
  bool dfs(std::size_t depth) {
    if (depth == order_.size()) return visit_(map_);
    const Vertex u = order_[depth];
    Bitset cand(static_cast<std::size_t>(g_.order()), true);
    cand.and_not(used_);
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex w = order_[i];
      const Vertex image = map_[static_cast<std::size_t>(w)];
      if (h_.adjacent(u, w)) {
        cand &= g_.row(image);
      } else {
        cand.and_not(g_.row(image));
      }
    }
    const int need = h_.degree(u);
    bool keep_going = true;
    cand.for_each([&](Vertex v) {
      if (!keep_going || g_.degree(v) < need) return;
      if (budget_ && stats_.nodes >= *budget_) {
        stats_.complete = false;
        keep_going = false;
        return;
      }
      ++stats_.nodes;
      map_[static_cast<std::size_t>(u)] = v;
      used_.set(static_cast<std::size_t>(v));
      keep_going = dfs(depth + 1);
      used_.reset(static_cast<std::size_t>(v));
      map_[static_cast<std::size_t>(u)] = -1;
    });
    return keep_going;
  }

  const Graph& g_;
  const Graph& h_;
  const EmbeddingVisitor& visit_;
  Budget budget_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  Bitset used_;
  MatchStats stats_;
};

}  // namespace

std::optional<BicliqueCertificate> find_biclique(const Graph& g, int s) {
  if (s < 1) throw ParameterError("find_biclique: s must be at least 1");
  if (2 * s > g.order()) return std::nullopt;
  return BicliqueSearch(g, s).run();
}

bool verify_biclique(const Graph& g, const BicliqueCertificate& cert) {
  if (cert.side_a.size() != cert.side_b.size() || cert.side_a.empty()) return false;
  for (Vertex a : cert.side_a) {
    if (!g.valid_vertex(a) || cert.side_b.contains(a)) return false;
    for (Vertex b : cert.side_b) {
      if (!g.valid_vertex(b) || !g.adjacent(a, b)) return false;
    }
  }
  return true;
}

MatchStats for_each_induced_embedding(const Graph& g, const Graph& h, const EmbeddingVisitor& visit, Budget budget) {
  return InducedMatcher(g, h, visit, budget).run();
}

SearchResult<Embedding> find_induced(const Graph& g, const Graph& h, Budget budget) {
  if (h.order() < 1) throw InputError("find_induced: pattern must have at least one vertex");
  SearchResult<Embedding> out;
  const EmbeddingVisitor grab = [&](const std::vector<Vertex>& m) {
    out.witness = Embedding{m, true};
    return false;
  };
  const auto stats = for_each_induced_embedding(g, h, grab, budget);
  out.nodes = stats.nodes;
  if (out.witness) {
    out.status = SearchStatus::found;
  } else {
    out.status = stats.complete ? SearchStatus::absent : SearchStatus::exhausted;
  }
  return out;
}

bool verify_embedding(const Graph& g, const Graph& h, const Embedding& e) {
  if (e.pattern_order() != static_cast<std::size_t>(h.order())) {
    throw InputError("verify_embedding: embedding covers " + std::to_string(e.pattern_order()) +
                     " pattern vertices, pattern has " + std::to_string(h.order()));
  }
  Bitset seen(static_cast<std::size_t>(g.order()));
  for (Vertex v : e.map) {
    if (!g.valid_vertex(v) || seen.test(static_cast<std::size_t>(v))) return false;
    seen.set(static_cast<std::size_t>(v));
  }
  for (Vertex u = 0; u < h.order(); ++u) {
    for (Vertex w = u + 1; w < h.order(); ++w) {
      const bool in_h = h.adjacent(u, w);
      const bool in_g = g.adjacent(e.map[static_cast<std::size_t>(u)], e.map[static_cast<std::size_t>(w)]);
      if (in_h && !in_g) return false;
      if (e.induced && in_g && !in_h) return false;
    }
  }
  return true;
}

WitnessReport witness_check(const Graph& g, const std::vector<Graph>& family, int s, Budget budget) {
  WitnessReport report;
  report.kss_violation = find_biclique(g, s);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].order() < 1) throw InputError("witness_check: family members must be non-empty");
    auto r = find_induced(g, family[i], budget);
    if (r.status == SearchStatus::found) {
      report.induced_violations.emplace_back(i, *r.witness);
    } else if (r.status == SearchStatus::exhausted) {
      report.inconclusive = true;
    }
  }
  report.passed = !report.kss_violation && report.induced_violations.empty() && !report.inconclusive;
  return report;
}

}  // namespace indturan
