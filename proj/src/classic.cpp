#include "oidom/classic.hpp"

#include <string>

namespace oidom::classic {

Graph complete(int n) { return Graph(n).complement(); }

Graph empty(int n) { return Graph(n); }

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices, got " + std::to_string(n));
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph path(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph star(int n) {
  if (n < 1) throw GraphError("star needs at least one vertex");
  GraphBuilder b(n);
  for (int i = 1; i < n; ++i) b.add_edge(0, i);
  return b.build();
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw GraphError("negative part size");
  GraphBuilder builder(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) builder.add_edge(i, a + j);
  }
  return builder.build();
}

Graph matching(int t) {
  if (t < 0) throw GraphError("negative matching size");
  GraphBuilder b(2 * t);
  for (int i = 0; i < t; ++i) b.add_edge(2 * i, 2 * i + 1);
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(g.order() + e.u, g.order() + e.v);
  return b.build();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int m = h.order();
  GraphBuilder b(g.order() * m);
  for (int i = 0; i < g.order(); ++i) {
    for (const Edge& e : h.edges()) b.add_edge(i * m + e.u, i * m + e.v);
  }
  for (const Edge& e : g.edges()) {
    for (int j = 0; j < m; ++j) b.add_edge(e.u * m + j, e.v * m + j);
  }
  return b.build();
}

}  // namespace oidom::classic
