#include <algorithm>
#include <sstream>

#include "indturan/algorithms.hpp"
#include "indturan/errors.hpp"

namespace indturan {

namespace {

using Path = std::vector<Vertex>;  // u, interior..., v

struct PathEnumeration {
  std::vector<Path> paths;
  bool complete = true;
};

// Induced u-v paths with exactly l edges.
PathEnumeration induced_paths(const Graph& g, Vertex u, Vertex v, int l, std::uint64_t cap) {
  PathEnumeration out;
  Path path{u};
  Bitset used(static_cast<std::size_t>(g.order()));
  used.set(static_cast<std::size_t>(u));

  auto dfs = [&](auto&& self) -> bool {
    const auto depth = static_cast<int>(path.size());  // vertices placed
    const Vertex last = path.back();
    if (depth == l) {
      // The final interior vertex must see v; nothing earlier may.
      if (!g.adjacent(last, v)) return true;
      if (out.paths.size() >= cap) {
        out.complete = false;
        return false;
      }
      path.push_back(v);
      out.paths.push_back(path);
      path.pop_back();
      return true;
    }
    // Next vertex: neighbour of last, not adjacent to earlier vertices, not v.
    Bitset cand = g.neighbors(last);
    cand.and_not(used);
    cand.reset(static_cast<std::size_t>(v));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) cand.and_not(g.row(path[i]));
    const bool final_interior = depth == l - 1;
    bool go = true;
    cand.for_each([&](Vertex x) {
      if (!go) return;
      if (!final_interior && g.adjacent(x, v)) return;
      path.push_back(x);
      used.set(static_cast<std::size_t>(x));
      go = self(self);
      used.reset(static_cast<std::size_t>(x));
      path.pop_back();
    });
    return go;
  };
  if (l == 1) {
    if (g.adjacent(u, v)) out.paths.push_back({u, v});
    return out;
  }
  if (g.adjacent(u, v)) return out;
  dfs(dfs);
  return out;
}

bool compatible(const Graph& g, const Path& a, const Path& b) {
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    for (std::size_t j = 1; j + 1 < b.size(); ++j) {
      if (a[i] == b[j] || g.adjacent(a[i], b[j])) return false;
    }
  }
  return true;
}

struct CliqueSearch {
  const Graph& h;
  std::size_t target;
  Budget budget;
  std::uint64_t nodes = 0;
  bool complete = true;
  std::vector<Vertex> chosen;

  bool run() {
    Bitset all(static_cast<std::size_t>(h.order()), true);
    return dfs(all);
  }

  bool dfs(Bitset cand) {
    if (chosen.size() == target) return true;
    if (chosen.size() + cand.count() < target) return false;
    for (Vertex v = cand.first(); v >= 0; v = cand.first()) {
      if (budget && nodes >= *budget) {
        complete = false;
        return false;
      }
      ++nodes;
      cand.reset(static_cast<std::size_t>(v));
      Bitset next = cand;
      next &= h.row(v);
      chosen.push_back(v);
      if (dfs(next)) return true;
      chosen.pop_back();
      if (!complete) return false;
      if (chosen.size() + cand.count() < target) return false;
    }
    return false;
  }
};

}  // namespace

SearchResult<Embedding> find_induced_theta(const Graph& g, int l, int t, const PipelineConfig& cfg) {
  if (l < 2 || t < 2) throw ParameterError("find_induced_theta: need l >= 2 and t >= 2");
  SearchResult<Embedding> out;
  const int n = g.order();
  const auto pattern = theta(l, t);

  const auto walks = walk_matrix(g, l);
  struct Pair {
    BigInt walks;
    Vertex u;
    Vertex v;
  };
  std::vector<Pair> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && walks.at(u, v) >= t) pairs.push_back({walks.at(u, v), u, v});
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.walks > b.walks; });

  bool complete = true;
  std::uint64_t remaining = cfg.search_budget;
  for (const auto& pr : pairs) {
    auto paths = induced_paths(g, pr.u, pr.v, l, cfg.path_cap);
    complete = complete && paths.complete;
    if (paths.paths.size() < static_cast<std::size_t>(t)) continue;
    std::vector<Edge> edges;
    const auto& ps = paths.paths;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (compatible(g, ps[i], ps[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    const Graph compat(static_cast<int>(ps.size()), edges);
    CliqueSearch search{compat, static_cast<std::size_t>(t), remaining, 0, true, {}};
    const bool hit = search.run();
    out.nodes += search.nodes;
    remaining = remaining > search.nodes ? remaining - search.nodes : 0;
    if (!search.complete) {
      complete = false;
      break;
    }
    if (!hit) continue;

    Embedding e;
    e.map.assign(static_cast<std::size_t>(pattern.graph.order()), -1);
    e.map[0] = pr.u;
    e.map[1] = pr.v;
    for (int i = 0; i < t; ++i) {
      const auto& path = ps[static_cast<std::size_t>(search.chosen[static_cast<std::size_t>(i)])];
      for (int j = 0; j < l - 1; ++j) e.map[static_cast<std::size_t>(2 + (l - 1) * i + j)] = path[static_cast<std::size_t>(j + 1)];
    }
    if (!verify_embedding(g, pattern.graph, e)) throw std::logic_error("find_induced_theta: assembled theta is not induced");
    std::ostringstream diag;
    diag << "terminals " << pr.u << "," << pr.v << " paths=" << ps.size() << " compatible_pairs=" << edges.size();
    out.diagnostic = diag.str();
    out.witness = std::move(e);
    out.status = SearchStatus::found;
    return out;
  }
  out.status = complete ? SearchStatus::absent : SearchStatus::exhausted;
  out.diagnostic = std::to_string(pairs.size()) + " terminal pairs examined";
  return out;
}

}  // namespace indturan
