#pragma once

/// \file classic.hpp
/// Standard named graphs. Vertex numbering is fixed and documented per function.

#include "oidom/graph.hpp"

namespace oidom::classic {

Graph complete(int n);
Graph empty(int n);
/// 0-1-...-(n-1)-0, n >= 3.
Graph cycle(int n);
/// 0-1-...-(n-1).
Graph path(int n);
/// K_{1,n-1} with centre 0.
Graph star(int n);
/// Sides {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
/// t disjoint edges {2i, 2i+1}.
Graph matching(int t);
/// Vertices of h follow those of g.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Vertex (i, j) of G x H is i * |H| + j.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace oidom::classic
