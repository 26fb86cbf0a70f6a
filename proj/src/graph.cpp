#include "indturan/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "indturan/errors.hpp"

namespace indturan {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_vertex(const Graph& g, Vertex v) {
  if (!g.valid_vertex(v)) {
    throw InputError("vertex id " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(g.order()));
  }
}

}  // namespace

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
  if (bound <= 0) throw ParameterError("uniform_below: bound must be positive");
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  const std::size_t limbs = (bits + 63) / 64;
  const std::size_t spare = limbs * 64 - bits;
  for (;;) {
    BigInt x = 0;
    for (std::size_t i = 0; i < limbs; ++i) {
      std::uint64_t word = rng();
      if (i == 0 && spare > 0) word >>= spare;
      x <<= 64;
      x += word;
    }
    if (x < bound) return x;
  }
}

Bitset::Bitset(std::size_t size, bool fill) : words_(words_for(size), fill ? ~std::uint64_t{0} : 0), size_(size) {
  if (fill && (size & 63) != 0) words_.back() &= (std::uint64_t{1} << (size & 63)) - 1;
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Bitset& Bitset::operator&=(std::span<const std::uint64_t> other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
  return *this;
}

Bitset& Bitset::operator|=(std::span<const std::uint64_t> other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other[i];
  return *this;
}

Bitset& Bitset::and_not(std::span<const std::uint64_t> other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other[i];
  return *this;
}

Vertex Bitset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  }
  return -1;
}

std::vector<Vertex> Bitset::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

VertexSet::VertexSet(std::vector<Vertex> vs) : ids_(std::move(vs)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw InputError("vertex set contains duplicate ids");
  }
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw ParameterError("graph order must be non-negative");
  stride_ = words_for(static_cast<std::size_t>(n));
  adjacency_.assign(static_cast<std::size_t>(n) * stride_, 0);
  degrees_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!adjacent(u, v)) add_edge_unchecked(u, v);
  }
}

void Graph::add_edge_unchecked(Vertex u, Vertex v) {
  auto su = static_cast<std::size_t>(u);
  auto sv = static_cast<std::size_t>(v);
  adjacency_[su * stride_ + (sv >> 6)] |= std::uint64_t{1} << (sv & 63);
  adjacency_[sv * stride_ + (su >> 6)] |= std::uint64_t{1} << (su & 63);
  ++degrees_[su];
  ++degrees_[sv];
  ++edge_count_;
}

Bitset Graph::neighbors(Vertex v) const {
  Bitset b(static_cast<std::size_t>(n_));
  b |= row(v);
  return b;
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const { return neighbors(v).to_vector(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    neighbors(u).for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vs) const {
  const int m = static_cast<int>(vs.size());
  std::vector<Edge> sub;
  for (int i = 0; i < m; ++i) {
    check_vertex(*this, vs[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < m; ++j) {
      if (adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)])) sub.emplace_back(i, j);
    }
  }
  return Graph(m, sub);
}

Bitset common_neighborhood_bits(const Graph& g, std::span<const Vertex> s) {
  Bitset out(static_cast<std::size_t>(g.order()), true);
  for (Vertex u : s) {
    check_vertex(g, u);
    out &= g.row(u);
  }
  for (Vertex u : s) out.reset(static_cast<std::size_t>(u));
  return out;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
  return VertexSet(common_neighborhood_bits(g, s.ids()).to_vector());
}

std::size_t codegree(const Graph& g, const VertexSet& s) { return common_neighborhood_bits(g, s.ids()).count(); }

std::size_t codegree(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return static_cast<std::size_t>(g.degree(u));
  return popcount_and(g.row(u), g.row(v));
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) throw InputError("degree profile of the empty graph is undefined");
  const auto& deg = g.degrees();
  auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
  return DegreeProfile{*lo, *hi, Rational(2 * static_cast<long long>(g.edge_count()), g.order())};
}

bool is_k_almost_regular(const Graph& g, double k) {
  if (!(k >= 1.0)) throw ParameterError("almost-regularity constant K must be at least 1");
  const auto p = degree_profile(g);
  return static_cast<double>(p.max_degree) <= k * static_cast<double>(p.min_degree);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex v) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        queue.push_back(v);
      }
    });
  }
  return reached == g.order();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbor_list(u)) {
        auto& sv = side[static_cast<std::size_t>(v)];
        if (sv == -1) {
          sv = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (sv == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::size_t max_codegree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) best = std::max(best, popcount_and(g.row(u), g.row(v)));
  }
  return best;
}

}  // namespace indturan
