#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "indturan/graph.hpp"

namespace indturan {

// Certificate equal for two graphs iff they are isomorphic. Produced by
// colour refinement on degree/codegree invariants followed by a backtracking
// search for the lexicographically smallest adjacency code among orderings
// that respect the refined colour classes. Exponential in the worst case;
// intended for pattern-sized graphs.
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint8_t> code;  // upper-triangle bits under the canonical ordering

  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);

// Ordering realising canonical_form: position i holds the original vertex.
std::vector<Vertex> canonical_ordering(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace indturan
