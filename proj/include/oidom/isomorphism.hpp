#pragma once

/// \file isomorphism.hpp
/// Small-order isomorphism by exhaustive canonical form.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oidom/graph.hpp"

namespace oidom {

inline constexpr int kDefaultIsomorphismCap = 10;

class IsomorphismCapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Minimum adjacency encoding over all vertex orders that list vertices by
/// nondecreasing (degree, sorted neighbour degrees). Row i holds the
/// adjacency of position i to positions 0..i-1; rows compare
/// lexicographically. Two graphs are isomorphic iff their forms are equal.
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint64_t> rows;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws IsomorphismCapError when g.order() > cap.
CanonicalForm canonical_form(const Graph& g, int cap = kDefaultIsomorphismCap);

/// The graph realising the canonical form (vertex i = canonical position i).
Graph canonical_graph(const Graph& g, int cap = kDefaultIsomorphismCap);

/// Quick invariant screen (order, size, degree sequence) before the
/// canonical-form comparison. Throws when either order exceeds cap.
bool are_isomorphic(const Graph& g, const Graph& h, int cap = kDefaultIsomorphismCap);

}  // namespace oidom
