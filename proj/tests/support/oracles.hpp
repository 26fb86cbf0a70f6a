#pragma once

// Brute-force reference implementations. Each works on a plain adjacency
// matrix and shares no code with the library beyond Graph::adjacent.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "indturan/graph.hpp"

namespace oracle {

using indturan::Graph;
using indturan::Vertex;
using Big = boost::multiprecision::cpp_int;

struct Dense {
  int n = 0;
  std::vector<std::vector<char>> a;

  explicit Dense(const Graph& g) : n(g.order()), a(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0)) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && g.adjacent(u, v)) a[u][v] = 1;
  }
  bool adj(int u, int v) const { return a[u][v] != 0; }
  int degree(int v) const { return std::accumulate(a[v].begin(), a[v].end(), 0); }
  std::size_t edges() const {
    std::size_t e = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e += a[u][v];
    return e;
  }
};

inline int codegree(const Dense& d, int u, int v) {
  int c = 0;
  for (int w = 0; w < d.n; ++w)
    if (w != u && w != v && d.adj(u, w) && d.adj(v, w)) ++c;
  return c;
}

// Walks of length k from u to v, by explicit enumeration.
inline Big walks(const Dense& d, int u, int v, int k) {
  if (k == 0) return u == v ? 1 : 0;
  Big total = 0;
  for (int w = 0; w < d.n; ++w)
    if (d.adj(u, w)) total += walks(d, w, v, k - 1);
  return total;
}

inline Big closed_walks(const Dense& d, int k) {
  Big total = 0;
  for (int v = 0; v < d.n; ++v) total += walks(d, v, v, k);
  return total;
}

// Unlabelled induced 4-cycles over all 4-subsets.
inline std::uint64_t induced_c4(const Dense& d) {
  std::uint64_t count = 0;
  const int n = d.n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          const int vs[4] = {a, b, c, e};
          int edges = 0;
          bool all_two = true;
          for (int i = 0; i < 4; ++i) {
            int deg = 0;
            for (int j = 0; j < 4; ++j)
              if (i != j && d.adj(vs[i], vs[j])) ++deg;
            edges += deg;
            all_two = all_two && deg == 2;
          }
          if (edges == 8 && all_two) ++count;
        }
  return count;
}

// Labelled induced copies: injections V(H) -> V(G) preserving adjacency and
// non-adjacency. Pattern vertices are placed in id order and a partial map
// is dropped as soon as one placed pair disagrees.
inline std::uint64_t labeled_induced(const Dense& g, const Dense& h) {
  std::vector<int> map;
  std::vector<char> used(static_cast<std::size_t>(g.n), 0);
  std::uint64_t count = 0;
  std::function<void()> rec = [&]() {
    const int i = static_cast<int>(map.size());
    if (i == h.n) {
      ++count;
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int x = 0; x < i && ok; ++x) ok = h.adj(x, i) == g.adj(map[x], v);
      if (!ok) continue;
      used[v] = 1;
      map.push_back(v);
      rec();
      map.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return count;
}

// Some s-subset A with at least s common neighbours outside A.
inline bool has_biclique(const Dense& d, int s) {
  if (2 * s > d.n) return false;
  std::vector<char> pick(static_cast<std::size_t>(d.n), 0);
  std::fill(pick.begin(), pick.begin() + s, 1);
  do {
    int common = 0;
    for (int w = 0; w < d.n; ++w) {
      if (pick[w]) continue;
      bool all = true;
      for (int v = 0; v < d.n && all; ++v)
        if (pick[v] && !d.adj(v, w)) all = false;
      common += all;
    }
    if (common >= s) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool isomorphic(const Dense& a, const Dense& b) {
  if (a.n != b.n || a.edges() != b.edges()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.n && ok; ++u)
      for (int v = u + 1; v < a.n && ok; ++v)
        if (a.adj(u, v) != b.adj(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Induced 2-paths x-m-y (x < y, x !~ y), tallied by midpoint and by endpoints.
struct TwoPaths {
  std::vector<std::uint64_t> by_mid;
  std::uint64_t total = 0;
};

inline TwoPaths two_paths(const Dense& d) {
  TwoPaths out;
  out.by_mid.assign(static_cast<std::size_t>(d.n), 0);
  for (int m = 0; m < d.n; ++m)
    for (int x = 0; x < d.n; ++x)
      for (int y = x + 1; y < d.n; ++y)
        if (x != m && y != m && d.adj(m, x) && d.adj(m, y) && !d.adj(x, y)) {
          ++out.by_mid[m];
          ++out.total;
        }
  return out;
}

// Both selection bullets, checked directly.
inline bool regular_selection(const std::vector<std::vector<std::int64_t>>& vs, const std::vector<std::size_t>& chosen) {
  if (chosen.empty()) return false;
  const std::size_t t = vs[chosen[0]].size();
  std::vector<std::set<std::int64_t>> ys(t);
  for (std::size_t j = 0; j < t; ++j) {
    for (auto i : chosen) ys[j].insert(vs[i][j]);
    if (ys[j].size() != 1 && ys[j].size() != chosen.size()) return false;
  }
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = a + 1; b < t; ++b)
      for (auto y : ys[a])
        if (ys[b].count(y)) return false;
  return true;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<indturan::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace oracle
