#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "indturan/numeric.hpp"

namespace indturan {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Fixed-size bitset over vertex ids. Rows of a Graph use the same word
// layout, so a row span can be combined directly with a Bitset.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size, bool fill = false);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }

  Bitset& operator&=(std::span<const std::uint64_t> other);
  Bitset& operator|=(std::span<const std::uint64_t> other);
  Bitset& and_not(std::span<const std::uint64_t> other);
  Bitset& operator&=(const Bitset& other) { return *this &= other.words(); }
  Bitset& operator|=(const Bitset& other) { return *this |= other.words(); }
  Bitset& and_not(const Bitset& other) { return and_not(other.words()); }

  std::span<const std::uint64_t> words() const { return words_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // Smallest set index, or -1.
  Vertex first() const;
  std::vector<Vertex> to_vector() const;

  bool operator==(const Bitset&) const = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

// Simple undirected graph on vertices 0..n-1 with bit-packed adjacency rows.
// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Duplicate edges collapse; self-loops and out-of-range ids throw InputError.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (adjacency_[static_cast<std::size_t>(u) * stride_ + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1U;
  }
  int degree(Vertex v) const { return degrees_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degrees() const { return degrees_; }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {adjacency_.data() + static_cast<std::size_t>(v) * stride_, stride_};
  }
  Bitset neighbors(Vertex v) const;
  std::vector<Vertex> neighbor_list(Vertex v) const;

  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced on `vs`; vertex vs[i] becomes i.
  Graph induced(std::span<const Vertex> vs) const;

  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adjacency_ == other.adjacency_;
  }

 private:
  void add_edge_unchecked(Vertex u, Vertex v);

  int n_ = 0;
  std::size_t stride_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> adjacency_;
  std::vector<int> degrees_;
};

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  Rational average_degree;  // 2e/n, exact

  double average() const { return to_double(average_degree); }
};

// N(S): vertices outside S adjacent to every member of S. N(empty) = V.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);
Bitset common_neighborhood_bits(const Graph& g, std::span<const Vertex> s);
std::size_t codegree(const Graph& g, const VertexSet& s);
// |N(u) ∩ N(v)| for u != v.
std::size_t codegree(const Graph& g, Vertex u, Vertex v);

DegreeProfile degree_profile(const Graph& g);
bool is_k_almost_regular(const Graph& g, double k);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
std::size_t max_codegree(const Graph& g);

}  // namespace indturan
