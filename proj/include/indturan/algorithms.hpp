#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "indturan/counters.hpp"
#include "indturan/detectors.hpp"
#include "indturan/generators.hpp"
#include "indturan/graph.hpp"

namespace indturan {

// ---------------------------------------------------------------------------
// Almost-regularization
// ---------------------------------------------------------------------------

struct RegularizationStage {
  int index = 0;
  int vertices = 0;                 // n_i
  double high_degree_threshold = 0;  // 2^i K' C n_i^alpha
  double high_degree_sum = 0;        // sum of degrees over U_i
  double stop_threshold = 0;         // 2^{i-1} C n_i^{1+alpha}
  int chosen_size = 0;               // |A_i| = |B_i|, 0 on the terminal stage
  std::uint64_t kept_edges = 0;      // e(G_i[A_i ∪ B_i]) for the best B_i
  double edge_floor = 0;             // 2^{i+1} C (n_i / K')^{1+alpha}
  int trials_used = 0;
};

enum class RegularizationStatus { success, hypothesis_failure, sampling_failure, postcondition_failure };

std::string to_string(RegularizationStatus s);

struct RegularizationResult {
  RegularizationStatus status = RegularizationStatus::hypothesis_failure;
  VertexSet vertices;  // vertices of H, as ids of the input graph
  Graph subgraph;      // H, relabelled in the order of `vertices`
  double k_prime = 0;  // 2^{4/alpha}
  double k_bound = 0;  // 4K', the almost-regularity guaranteed on success
  double achieved_ratio = 0;  // Delta(H) / delta(H)
  int iterations = 0;  // k
  std::vector<RegularizationStage> log;
  std::string diagnostic;

  bool success() const { return status == RegularizationStatus::success; }
};

// Passes to an induced subgraph whose max/min degree ratio is at most 4K'.
// B_i is the best of `trials` uniform subsets, accepted once it meets the
// expectation floor.
RegularizationResult almost_regularize(const Graph& g, double alpha, double c, int trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Bad neighbours and greedy induced-tree embedding
// ---------------------------------------------------------------------------

// X(v) = { u != v : codegree(u, v) >= threshold }.
VertexSet bad_neighbor_set(const Graph& g, Vertex v, double threshold);

// d^beta with beta = 1 - 1/(3s).
double supersaturation_threshold(const Graph& g, int s);

struct TreeOrder {
  std::vector<Vertex> order;  // w_1 .. w_t
  std::vector<int> attach;    // attach[k] = k' < k with w_{k'} w_k in E(T); -1 for k = 0
};

// BFS labelling in which every prefix induces a subtree ending in a leaf.
TreeOrder bfs_leaf_order(const Graph& tree, Vertex start = 0);

struct GreedyEmbedResult {
  std::optional<Embedding> embedding;  // map indexed by tree vertex
  int failed_step = -1;                // k with V_k empty
  std::vector<std::size_t> candidate_sizes;  // |V_k| for k = 2..reached
  TreeOrder order;
};

// One pass of the greedy embedder; each v_k is drawn uniformly from V_k.
GreedyEmbedResult greedy_tree_embed(const Graph& g, const Graph& tree, double threshold, std::uint64_t seed);

struct TreeEnumeration {
  std::uint64_t count = 0;
  bool complete = true;
  std::uint64_t nodes = 0;
  std::vector<Embedding> embeddings;  // filled when requested
};

// Every sequence of choices the greedy embedder could make, depth first.
TreeEnumeration enumerate_tree_embeddings(const Graph& g, const Graph& tree, double threshold, Budget budget,
                                          bool collect = false);

// Hypotheses under which every greedy step has many candidates:
// K-almost-regular, K_{s,s}-free, d >= (4Kt)^{6s} s^3.
struct SupersaturationHypothesis {
  bool almost_regular = false;
  bool kss_free = false;
  bool degree_large = false;
  double average_degree = 0;
  double required_degree = 0;

  bool holds() const { return almost_regular && kss_free && degree_large; }
};

SupersaturationHypothesis tree_supersaturation_hypothesis(const Graph& g, double k, int s, int t);

// ---------------------------------------------------------------------------
// Selection of q vectors with regular intersections
// ---------------------------------------------------------------------------

using Value = std::int64_t;

enum class PositionVerdict { all_same, pairwise_distinct, mixed };

struct SelectionResult {
  std::vector<std::size_t> chosen;  // indices into the input
  std::vector<PositionVerdict> verdicts;
  std::vector<std::vector<Value>> value_sets;  // Y_1 .. Y_t, sorted
  bool below_guarantee = false;  // fewer than N(t, q) input vectors
  bool success = false;
};

// N(t, q) = (t!)^2 q^{t+1}.
BigInt selection_threshold(int t, int q);

// At or above N(t, q) this runs the popular-value / fix-and-delete recursion
// verbatim. Below it the same two branches are explored with backtracking and
// smaller popularity cut-offs; success is then reported only when found.
SelectionResult select_regular(const std::vector<std::vector<Value>>& vectors, int q);

// Both selection properties, checked from scratch.
bool selection_is_regular(const std::vector<std::vector<Value>>& vectors, const std::vector<std::size_t>& chosen);

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

// Analysis constants as functions of the structural parameters. These grow
// far past any graph that can be built and are never used as defaults.
namespace analysis_constants {
double lift_q(int p, int s, int t);           // (2p)^s s t^{2s-1}
double lift_copies(int t, double q);          // (t!)^2 q^{t+1}
double theta_f(int l, int t, int s);          // (l t)^{20 s}
double prism_f(int l, int s);                 // 6^s s^{20 l^2}
double prism_g(int l, int s);                 // prism_f^{1/l}
double rich_set_c1(int l, int s);             // (16 l^2 s)^{8 l + 10}
double prism_lambda(int l, int s);            // s 80^s l^{2s}
double prism_delta(int l, int s);             // 1 / (100 lambda^2)
inline constexpr double prism_epsilon = 1.0 / 512.0;
inline constexpr const char* theta_constant_note = "C > (l t)^{100 l}";
inline constexpr const char* prism_constant_note = "C > l^{100 l}";
}  // namespace analysis_constants

struct PipelineConfig {
  int s = 2;
  int l = 2;
  int t = 2;
  int p = 2;
  std::optional<int> q;                  // copies fed to selection; defaults to p
  std::optional<double> thin_threshold;  // tau; defaults to d^{2/3}
  double bad_threshold = std::numeric_limits<double>::infinity();  // X(v) cut-off
  std::uint64_t enumeration_budget = 2'000'000;
  std::uint64_t path_cap = 20'000;  // induced paths kept per terminal pair
  std::uint64_t search_budget = 5'000'000;
  bool prism_fallback = false;
  std::uint64_t seed = kDefaultSeed;

  double beta() const { return 1.0 - 1.0 / (3.0 * s); }
  int selection_size() const { return q.value_or(p); }
};

// Greedy minimum-degree independent set; size >= n^2 / (2e + n).
std::vector<Vertex> greedy_independent_set(const Graph& g);

struct LiftSearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<Lift> lift;            // the (p;S)-lift found
  std::optional<Embedding> embedding;  // lift vertices -> host vertices
  std::string stage;                   // last stage reached
  std::uint64_t tree_copies = 0;
  std::size_t largest_group = 0;
  std::size_t conflict_edges = 0;
  std::size_t independent_set = 0;
  std::string diagnostic;
};

// Induced copy of some member of F^p(T;R): collect induced copies of T, keep
// the most common root image, select q regular copies, then p pairwise
// compatible ones.
LiftSearchResult find_induced_lift(const Graph& g, const RootedTree& rt, int p, const PipelineConfig& cfg);

// Induced theta(l, t): t internally disjoint induced l-paths between one
// pair whose pairwise unions are induced 2l-cycles. Map follows theta().
SearchResult<Embedding> find_induced_theta(const Graph& g, int l, int t, const PipelineConfig& cfg);

struct RichSetAudit {
  Vertex x = -1;
  Vertex y = -1;
  std::uint64_t thick_pairs = 0;  // (z, w) counted for the chosen edge
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  std::uint64_t edges_between = 0;  // e(A, B)
  double probability = 0;
  int trials_run = 0;
  std::size_t best_candidate = 0;  // largest |B''| seen
  std::size_t best_set = 0;        // largest |X| seen
  std::size_t bad_triples = 0;     // |𝓑| for the returned trial
  bool certified = false;          // every 3-subset of X has codegree >= c1
};

struct RichSetResult {
  std::optional<VertexSet> set;
  RichSetAudit audit;
  std::string diagnostic;
};

// Thick-case extraction of a set whose 3-subsets all have large codegree.
RichSetResult find_rich_set(const Graph& g, double tau, int c1, int c2, int trials, std::uint64_t seed);

// Every 3-subset of x has codegree at least c1.
bool rich_set_audit(const Graph& g, const VertexSet& x, int c1);

// One 2l-cycle in the auxiliary graph on E(G); each entry is an edge (x_i, y_i)
// with x_i ~ x_{i+1} and y_i ~ y_{i+1}.
enum class GammaCycleClass { degenerate, typical, special, twisted, induced };

std::string to_string(GammaCycleClass c);

GammaCycleClass classify_gamma_cycle(const Graph& g, const std::vector<Edge>& cycle);

// Induced prism(2l) via cycles in the thin-4-cycle auxiliary graph.
SearchResult<Embedding> find_induced_prism(const Graph& g, int l, const PipelineConfig& cfg);

}  // namespace indturan
