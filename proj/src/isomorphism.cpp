#include "indturan/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace indturan {

namespace {

std::vector<int> rank_signatures(const std::vector<std::vector<long long>>& sig) {
  std::vector<std::vector<long long>> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> colour(sig.size());
  for (std::size_t v = 0; v < sig.size(); ++v) {
    colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
  }
  return colour;
}

int class_count(const std::vector<int>& colour) {
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

// Stable colouring from (degree, triangles, sum of codegrees), refined by
// neighbour colour multisets.
std::vector<int> refine(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<long long>> sig(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    long long triangles = 0;
    long long codeg = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      const auto c = static_cast<long long>(popcount_and(g.row(u), g.row(v)));
      codeg += c;
      if (g.adjacent(u, v)) triangles += c;
    }
    sig[static_cast<std::size_t>(v)] = {g.degree(v), triangles, codeg};
  }
  auto colour = rank_signatures(sig);
  for (;;) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.assign(1, colour[static_cast<std::size_t>(v)]);
      std::vector<long long> nb;
      for (Vertex u : g.neighbor_list(v)) nb.push_back(colour[static_cast<std::size_t>(u)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    auto next = rank_signatures(sig);
    if (class_count(next) == class_count(colour)) return next;
    colour = std::move(next);
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), colour_(refine(g)) {
    cell_.assign(colour_.begin(), colour_.end());
    std::sort(cell_.begin(), cell_.end());
    used_.assign(static_cast<std::size_t>(n_), 0);
  }

  void run() {
    std::vector<std::uint8_t> code;
    dfs(0, code, 0);
  }

  std::vector<Vertex> best_order;
  std::vector<std::uint8_t> best_code;

 private:
  // cmp: -1 current prefix already smaller than best, 0 equal, (greater is pruned).
  void dfs(int depth, std::vector<std::uint8_t>& code, int cmp) {
    if (depth == n_) {
      if (best_order.empty() || cmp < 0) {
        best_order = order_;
        best_code = code;
      }
      return;
    }
    const int want = cell_[static_cast<std::size_t>(depth)];
    // Only candidates with the smallest row segment can lead to the minimum.
    std::vector<std::pair<std::vector<std::uint8_t>, Vertex>> options;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || colour_[static_cast<std::size_t>(v)] != want) continue;
      std::vector<std::uint8_t> seg;
      seg.reserve(order_.size());
      for (Vertex u : order_) seg.push_back(g_.adjacent(u, v) ? 1 : 0);
      options.emplace_back(std::move(seg), v);
    }
    const auto& min_seg = std::min_element(options.begin(), options.end())->first;
    const std::vector<std::uint8_t> min_copy = min_seg;
    for (auto& [seg, v] : options) {
      if (seg != min_copy) continue;
      int next_cmp = cmp;
      const std::size_t start = code.size();
      if (next_cmp == 0 && !best_order.empty()) {
        for (std::size_t i = 0; i < seg.size(); ++i) {
          if (seg[i] != best_code[start + i]) {
            next_cmp = seg[i] < best_code[start + i] ? -1 : 1;
            break;
          }
        }
        if (next_cmp > 0) continue;
      }
      code.insert(code.end(), seg.begin(), seg.end());
      order_.push_back(v);
      used_[static_cast<std::size_t>(v)] = 1;
      dfs(depth + 1, code, next_cmp);
      used_[static_cast<std::size_t>(v)] = 0;
      order_.pop_back();
      code.resize(start);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> cell_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
};

}  // namespace

std::vector<Vertex> canonical_ordering(const Graph& g) {
  if (g.order() == 0) return {};
  CanonicalSearch search(g);
  search.run();
  return search.best_order;
}

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm out;
  out.order = g.order();
  if (g.order() == 0) return out;
  CanonicalSearch search(g);
  search.run();
  out.code = std::move(search.best_code);
  return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace indturan
