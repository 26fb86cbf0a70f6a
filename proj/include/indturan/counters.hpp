#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "indturan/detectors.hpp"
#include "indturan/graph.hpp"
#include "indturan/numeric.hpp"

namespace indturan {

// Dense n x n matrix of exact walk counts.
class WalkMatrix {
 public:
  WalkMatrix(int n, int length) : n_(n), length_(length), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  int order() const { return n_; }
  int length() const { return length_; }
  const BigInt& at(Vertex u, Vertex v) const { return entries_[index(u, v)]; }
  BigInt& at(Vertex u, Vertex v) { return entries_[index(u, v)]; }
  BigInt trace() const;

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v); }

  int n_;
  int length_;
  std::vector<BigInt> entries_;
};

// A^length.
WalkMatrix walk_matrix(const Graph& g, int length);

// hom(C_k, G) = tr(A^k), the number of closed k-walks (rooted and directed).
BigInt hom_closed_walks(const Graph& g, int k);

// (A^length)_{uv}.
BigInt walk_count(const Graph& g, Vertex u, Vertex v, int length);

// Walks of each length 0..max_length from every vertex to `target`:
// result[r][x] = (A^r)_{x,target}.
std::vector<std::vector<BigInt>> walks_to(const Graph& g, Vertex target, int max_length);

struct WalkSample {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double degenerate = 0.0;
  double induced_cycle = 0.0;
  double chorded = 0.0;
};

// Closed 2l-walks split into degenerate (< 2l distinct vertices), induced
// (2l distinct vertices inducing a chordless cycle) and chorded (the rest).
// Exact mode: the three classes are exact counts summing to total.
// Sampled mode: total is still exact, the three classes hold sample tallies
// summing to the sample size, and `sample` carries the proportions.
struct WalkClassification {
  int length = 0;  // 2l
  BigInt total;
  BigInt degenerate;
  BigInt induced_cycle;
  BigInt chorded;
  std::optional<WalkSample> sample;
  bool complete = true;  // false when exact enumeration exceeded its budget
};

enum class WalkClass { degenerate, induced_cycle, chorded };

// Classification of one closed walk v_0 .. v_{m-1} (v_m = v_0).
WalkClass classify_walk(const Graph& g, const std::vector<Vertex>& walk);

struct ExactMode {
  std::uint64_t budget = 50'000'000;  // maximum number of walks enumerated
};
struct SampleMode {
  std::uint64_t samples = 10'000;
  std::uint64_t seed = kDefaultSeed;
};

WalkClassification classify_closed_walks(const Graph& g, int half_length, const ExactMode& mode);
WalkClassification classify_closed_walks(const Graph& g, int half_length, const SampleMode& mode);

// One closed walk of length 2l drawn uniformly from Hom(C_2l, G).
std::vector<Vertex> sample_closed_walk(const Graph& g, int half_length, std::mt19937_64& rng);

struct CountResult {
  BigInt count;
  bool complete = true;
  std::uint64_t nodes = 0;
};

// Labelled induced copies of H: injections phi with uv in E(H) <=>
// phi(u)phi(v) in E(G). Divide by |Aut(H)| for unlabelled copies.
CountResult count_labeled_induced(const Graph& g, const Graph& h, Budget budget = std::nullopt);

// Unlabelled induced 4-cycles, via nonadjacent midpoint pairs per diagonal.
BigInt count_induced_c4(const Graph& g);

// Visits every induced 4-cycle a-b-c-d-a exactly once.
template <class F>
void for_each_induced_c4(const Graph& g, F&& f);

struct C4Stats {
  BigInt induced_c4_count;
  BigInt thin_count;
  BigInt thick_count;
  double threshold = 0.0;
};

// Thin iff both diagonal codegrees are at most tau.
C4Stats thin_thick_stats(const Graph& g, double tau);

// d^{2/3}: the thin/thick threshold with the analysis constants dropped.
double default_thin_threshold(const Graph& g);

struct TwoPathTally {
  std::vector<std::uint64_t> per_vertex;                    // |P_{*v*}|
  std::map<std::pair<Vertex, Vertex>, std::uint64_t> per_pair;  // |P_{u*v}| for u < v, nonzero only
  std::uint64_t vertex_total() const;
  std::uint64_t pair_total() const;
};

TwoPathTally two_path_tally(const Graph& g);

// ---- template implementation ----

template <class F>
void for_each_induced_c4(const Graph& g, F&& f) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      Bitset mid = g.neighbors(u);
      mid &= g.row(v);
      // Report each cycle from its diagonal with the smaller minimum vertex.
      const auto m = mid.to_vector();
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
          const Vertex x = m[i];
          const Vertex y = m[j];
          if (g.adjacent(x, y) || x < u) continue;
          f(u, x, v, y);
        }
      }
    }
  }
}

}  // namespace indturan
