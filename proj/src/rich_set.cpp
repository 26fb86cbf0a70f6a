#include <algorithm>
#include <sstream>

#include "indturan/algorithms.hpp"
#include "indturan/errors.hpp"

namespace indturan {

namespace {

std::size_t triple_codegree(const Graph& g, Vertex a, Vertex b, Vertex c) {
  Bitset common = g.neighbors(a);
  common &= g.row(b);
  common &= g.row(c);
  return common.count();
}

struct OrientedEdge {
  std::uint64_t thick = 0;
  Vertex x = -1;
  Vertex y = -1;
};

// Pairs (z, w) with x-y-z-w an induced 4-cycle and codegree(x, z) >= tau.
std::uint64_t thick_count(const Graph& g, Vertex x, Vertex y, double tau) {
  std::uint64_t total = 0;
  Bitset zs = g.neighbors(y);
  zs.and_not(g.row(x));
  zs.reset(static_cast<std::size_t>(x));
  zs.for_each([&](Vertex z) {
    if (static_cast<double>(popcount_and(g.row(x), g.row(z))) < tau) return;
    Bitset ws = g.neighbors(x);
    ws &= g.row(z);
    ws.and_not(g.row(y));
    ws.reset(static_cast<std::size_t>(y));
    total += ws.count();
  });
  return total;
}

}  // namespace

bool rich_set_audit(const Graph& g, const VertexSet& x, int c1) {
  const auto& v = x.ids();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (std::size_t k = j + 1; k < v.size(); ++k)
        if (triple_codegree(g, v[i], v[j], v[k]) < static_cast<std::size_t>(c1)) return false;
  return true;
}

RichSetResult find_rich_set(const Graph& g, double tau, int c1, int c2, int trials, std::uint64_t seed) {
  if (!(tau > 0) || c1 <= 0 || c2 <= 0) throw ParameterError("find_rich_set: tau, c1 and c2 must be positive");
  if (trials < 1) throw ParameterError("find_rich_set: trials must be at least 1");
  RichSetResult out;

  std::vector<OrientedEdge> ranked;
  for (const auto& [u, v] : g.edges()) {
    for (const auto& [x, y] : {Edge{u, v}, Edge{v, u}}) {
      const auto c = thick_count(g, x, y, tau);
      if (c > 0) ranked.push_back({c, x, y});
    }
  }
  if (ranked.empty()) {
    out.diagnostic = "no thick induced 4-cycle at this threshold";
    return out;
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return std::tie(b.thick, a.x, a.y) < std::tie(a.thick, b.x, b.y);
  });
  const auto top = ranked.front().thick;

  auto rng = make_rng(seed, 0x7269);
  bool have_audit = false;
  for (const auto& edge : ranked) {
    if (edge.thick < top) break;
    RichSetAudit audit;
    audit.x = edge.x;
    audit.y = edge.y;
    audit.thick_pairs = edge.thick;
    const auto a = g.neighbor_list(edge.x);
    std::vector<Vertex> b;
    for (Vertex z : g.neighbor_list(edge.y)) {
      if (z != edge.x && static_cast<double>(popcount_and(g.row(edge.x), g.row(z))) >= tau) b.push_back(z);
    }
    audit.a_size = a.size();
    audit.b_size = b.size();
    for (Vertex z : b) {
      for (Vertex w : a)
        if (g.adjacent(z, w)) ++audit.edges_between;
    }
    if (audit.edges_between == 0) continue;
    audit.probability = std::min(1.0, 2.0 * c2 * static_cast<double>(a.size()) / static_cast<double>(audit.edges_between));

    std::bernoulli_distribution keep(audit.probability);
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    for (int trial = 0; trial < trials; ++trial) {
      audit.trials_run = trial + 1;
      std::vector<Vertex> b1;
      for (Vertex z : b)
        if (keep(rng)) b1.push_back(z);
      const Vertex v = a[pick(rng)];
      std::vector<Vertex> b2;
      for (Vertex z : b1)
        if (g.adjacent(v, z)) b2.push_back(z);
      audit.best_candidate = std::max(audit.best_candidate, b2.size());

      std::vector<char> alive(b2.size(), 1);
      std::size_t bad = 0;
      for (std::size_t i = 0; i < b2.size(); ++i)
        for (std::size_t j = i + 1; j < b2.size(); ++j)
          for (std::size_t k = j + 1; k < b2.size(); ++k) {
            if (triple_codegree(g, b2[i], b2[j], b2[k]) >= static_cast<std::size_t>(c1)) continue;
            ++bad;
            if (alive[i] && alive[j] && alive[k]) alive[k] = 0;
          }
      std::vector<Vertex> x;
      for (std::size_t i = 0; i < b2.size(); ++i)
        if (alive[i]) x.push_back(b2[i]);
      audit.best_set = std::max(audit.best_set, x.size());
      if (x.size() < static_cast<std::size_t>(c2)) continue;

      VertexSet set(x);
      audit.bad_triples = bad;
      audit.certified = rich_set_audit(g, set, c1);
      if (!audit.certified) throw std::logic_error("find_rich_set: extracted set failed its codegree audit");
      out.set = std::move(set);
      out.audit = audit;
      std::ostringstream msg;
      msg << "edge " << edge.x << "-" << edge.y << " trial " << trial + 1;
      out.diagnostic = msg.str();
      return out;
    }
    if (!have_audit || audit.best_set > out.audit.best_set) out.audit = audit;
    have_audit = true;
  }
  std::ostringstream msg;
  msg << "no trial reached |X| >= " << c2 << " (best " << out.audit.best_set << ")";
  out.diagnostic = msg.str();
  return out;
}

}  // namespace indturan
