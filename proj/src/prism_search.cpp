#include <algorithm>
#include <sstream>

#include "indturan/algorithms.hpp"
#include "indturan/errors.hpp"

namespace indturan {

std::string to_string(GammaCycleClass c) {
  switch (c) {
    case GammaCycleClass::degenerate:
      return "degenerate";
    case GammaCycleClass::typical:
      return "typical";
    case GammaCycleClass::special:
      return "special";
    case GammaCycleClass::twisted:
      return "twisted";
    case GammaCycleClass::induced:
      return "induced";
  }
  return "unknown";
}

GammaCycleClass classify_gamma_cycle(const Graph& g, const std::vector<Edge>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4 || k % 2 != 0) throw InputError("classify_gamma_cycle: cycle length must be even and at least 4");
  for (const auto& [x, y] : cycle) {
    if (!g.valid_vertex(x) || !g.valid_vertex(y) || x == y || !g.adjacent(x, y)) {
      throw InputError("classify_gamma_cycle: entries must be edges of G");
    }
  }
  auto shares = [](const Edge& a, const Edge& b) {
    return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
  };
  auto linked = [&](const Edge& a, const Edge& b) {
    return g.adjacent(a.first, b.first) && g.adjacent(a.second, b.second) && !g.adjacent(a.first, b.second) &&
           !g.adjacent(a.second, b.first);
  };
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (shares(cycle[i], cycle[i + 1]) || !linked(cycle[i], cycle[i + 1])) {
      throw InputError("classify_gamma_cycle: entries " + std::to_string(i) + " and " + std::to_string(i + 1) +
                       " do not bound an induced 4-cycle");
    }
  }
  const Edge& last = cycle[k - 1];
  const Edge& head = cycle[0];
  const bool straight = !shares(last, head) && linked(last, head);
  const bool twisted = !shares(last, head) && linked(last, Edge{head.second, head.first});
  if (!straight && !twisted) throw InputError("classify_gamma_cycle: last and first entries are not linked");

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (shares(cycle[i], cycle[j])) return GammaCycleClass::degenerate;

  const std::size_t half = k / 2;
  bool chord = false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      const auto& a = cycle[i];
      const auto& b = cycle[j];
      const bool edge = g.adjacent(a.first, b.first) || g.adjacent(a.first, b.second) ||
                        g.adjacent(a.second, b.first) || g.adjacent(a.second, b.second);
      if (!edge) continue;
      if (i != 0 && i != half && j != 0 && j != half) return GammaCycleClass::typical;
      chord = true;
    }
  }
  if (chord) return GammaCycleClass::special;
  return twisted ? GammaCycleClass::twisted : GammaCycleClass::induced;
}

namespace {

class PrismSearch {
 public:
  PrismSearch(const Graph& g, int l, double tau, Budget budget)
      : g_(g), length_(static_cast<std::size_t>(2 * l)), budget_(budget), edges_(g.edges()), gamma_(edges_.size()) {
    for_each_induced_c4(g, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
      if (static_cast<double>(popcount_and(g.row(a), g.row(c))) > tau) return;
      if (static_cast<double>(popcount_and(g.row(b), g.row(d))) > tau) return;
      link(index(a, b), index(c, d));
      link(index(b, c), index(d, a));
    });
    for (auto& adj : gamma_) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
      gamma_edges_ += adj.size();
    }
    gamma_edges_ /= 2;
    used_ = Bitset(static_cast<std::size_t>(g.order()));
  }

  std::optional<std::vector<Edge>> run() {
    for (std::size_t s = 0; s < edges_.size() && !stopped_; ++s) {
      start_ = s;
      path_.assign(1, edges_[s]);
      used_.set(static_cast<std::size_t>(edges_[s].first));
      used_.set(static_cast<std::size_t>(edges_[s].second));
      if (dfs(s)) return path_;
      used_.reset(static_cast<std::size_t>(edges_[s].first));
      used_.reset(static_cast<std::size_t>(edges_[s].second));
    }
    return std::nullopt;
  }

  bool complete() const { return !stopped_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t twisted() const { return twisted_; }
  std::size_t gamma_edges() const { return gamma_edges_; }
  std::size_t gamma_vertices() const { return edges_.size(); }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    const Edge e{std::min(u, v), std::max(u, v)};
    return static_cast<std::size_t>(std::lower_bound(edges_.begin(), edges_.end(), e) - edges_.begin());
  }

  void link(std::size_t a, std::size_t b) {
    gamma_[a].push_back(b);
    gamma_[b].push_back(a);
  }

  bool touches(Vertex v, std::size_t from, std::size_t to) const {
    for (std::size_t i = from; i < to; ++i)
      if (g_.adjacent(v, path_[i].first) || g_.adjacent(v, path_[i].second)) return true;
    return false;
  }

  bool dfs(std::size_t at) {
    const std::size_t depth = path_.size();
    const auto [x, y] = path_.back();
    const bool closing = depth + 1 == length_;
    for (std::size_t f : gamma_[at]) {
      if (f <= start_) continue;
      auto [c, d] = edges_[f];
      if (!(g_.adjacent(x, c) && g_.adjacent(y, d))) std::swap(c, d);
      if (used_.test(static_cast<std::size_t>(c)) || used_.test(static_cast<std::size_t>(d))) continue;
      if (budget_ && nodes_ >= *budget_) {
        stopped_ = true;
        return false;
      }
      ++nodes_;
      if (closing) {
        if (touches(c, 1, depth - 1) || touches(d, 1, depth - 1)) continue;
        const auto [x0, y0] = path_.front();
        if (g_.adjacent(c, y0) && g_.adjacent(d, x0)) {
          ++twisted_;
          continue;
        }
        if (!std::binary_search(gamma_[f].begin(), gamma_[f].end(), start_)) continue;
        if (!(g_.adjacent(c, x0) && g_.adjacent(d, y0))) continue;
        path_.emplace_back(c, d);
        return true;
      }
      if (touches(c, 0, depth - 1) || touches(d, 0, depth - 1)) continue;
      path_.emplace_back(c, d);
      used_.set(static_cast<std::size_t>(c));
      used_.set(static_cast<std::size_t>(d));
      if (dfs(f)) return true;
      used_.reset(static_cast<std::size_t>(c));
      used_.reset(static_cast<std::size_t>(d));
      path_.pop_back();
      if (stopped_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t length_;
  Budget budget_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> gamma_;
  std::size_t gamma_edges_ = 0;
  std::vector<Edge> path_;
  Bitset used_;
  std::size_t start_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t twisted_ = 0;
  bool stopped_ = false;
};

}  // namespace

SearchResult<Embedding> find_induced_prism(const Graph& g, int l, const PipelineConfig& cfg) {
  if (l < 2) throw ParameterError("find_induced_prism: l must be at least 2");
  const double tau = cfg.thin_threshold ? *cfg.thin_threshold : (g.order() > 0 ? default_thin_threshold(g) : 0.0);
  const Graph pattern = prism(2 * l);
  SearchResult<Embedding> out;

  PrismSearch search(g, l, tau, cfg.search_budget);
  const auto cycle = search.run();
  out.nodes = search.nodes();
  std::ostringstream diag;
  diag << "gamma_vertices=" << search.gamma_vertices() << " gamma_edges=" << search.gamma_edges()
       << " twisted_closures=" << search.twisted() << " tau=" << tau;

  if (cycle) {
    const auto k = cycle->size();
    Embedding e;
    e.map.assign(2 * k, -1);
    for (std::size_t i = 0; i < k; ++i) {
      e.map[i] = (*cycle)[i].first;
      e.map[k + i] = (*cycle)[i].second;
    }
    if (!verify_embedding(g, pattern, e)) throw std::logic_error("find_induced_prism: assembled prism is not induced");
    out.status = SearchStatus::found;
    out.witness = std::move(e);
    out.diagnostic = diag.str();
    return out;
  }
  out.status = search.complete() ? SearchStatus::absent : SearchStatus::exhausted;
  if (cfg.prism_fallback) {
    auto direct = find_induced(g, pattern, cfg.search_budget);
    out.nodes += direct.nodes;
    diag << " fallback=" << to_string(direct.status);
    if (direct.found()) {
      out.status = SearchStatus::found;
      out.witness = std::move(direct.witness);
    } else if (direct.status == SearchStatus::absent) {
      out.status = SearchStatus::absent;
    }
  }
  out.diagnostic = diag.str();
  return out;
}

}  // namespace indturan
