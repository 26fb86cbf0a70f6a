#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "indturan/graph.hpp"

namespace indturan {

// Injective map from pattern vertices to host vertices.
struct Embedding {
  std::vector<Vertex> map;
  bool induced = true;

  std::size_t pattern_order() const { return map.size(); }
  bool operator==(const Embedding&) const = default;
};

struct BicliqueCertificate {
  VertexSet side_a;
  VertexSet side_b;
};

enum class SearchStatus { found, absent, exhausted };

std::string to_string(SearchStatus s);

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<T> witness;
  std::uint64_t nodes = 0;
  std::string diagnostic;

  bool found() const { return status == SearchStatus::found; }
};

// Node budget for backtracking searches; nullopt means unlimited.
using Budget = std::optional<std::uint64_t>;

// A K_{s,s} subgraph (sides disjoint, not necessarily induced), or nullopt.
// 2s > n returns nullopt without searching.
std::optional<BicliqueCertificate> find_biclique(const Graph& g, int s);

bool verify_biclique(const Graph& g, const BicliqueCertificate& cert);

// Callback for exhaustive induced matching; return false to stop.
using EmbeddingVisitor = std::function<bool(const std::vector<Vertex>&)>;

// Backtracking over injections phi with uv in E(H) <=> phi(u)phi(v) in E(G).
// Visits every induced copy (labelled) until the visitor stops or the node
// budget runs out. Returns the node count and whether the search finished.
struct MatchStats {
  std::uint64_t nodes = 0;
  bool complete = true;
};
MatchStats for_each_induced_embedding(const Graph& g, const Graph& h, const EmbeddingVisitor& visit,
                                      Budget budget = std::nullopt);

SearchResult<Embedding> find_induced(const Graph& g, const Graph& h, Budget budget = std::nullopt);

// Checks injectivity and the adjacency condition (biconditional when
// e.induced). Throws InputError if the map length differs from |V(H)|.
bool verify_embedding(const Graph& g, const Graph& h, const Embedding& e);

struct WitnessReport {
  std::optional<BicliqueCertificate> kss_violation;
  std::vector<std::pair<std::size_t, Embedding>> induced_violations;  // (family index, copy)
  bool inconclusive = false;  // some induced search ran out of budget
  bool passed = false;
};

// Checks G against the ex*(n, family, s) constraints: no K_{s,s} and no
// induced copy of any family member.
WitnessReport witness_check(const Graph& g, const std::vector<Graph>& family, int s, Budget budget = std::nullopt);

}  // namespace indturan
