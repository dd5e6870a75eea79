#include <string>
#include <vector>

#include "oidom/solvers.hpp"

namespace oidom {

namespace {

// Visits the k-subsets of {0..n-1} in lexicographic order of their sorted
// member lists; stops at the first subset accepted by `accept`.
template <class Accept>
std::optional<VertexSet> first_subset(int n, int k, Accept accept) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int v : idx) s.insert(v);
    if (accept(s)) return s;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ParamResult solve_naive(const Graph& g, ParamKind kind, int guard) {
  const int n = g.order();
  if (n > guard) {
    throw SolverGuardError("naive solver limited to order " + std::to_string(guard) + ", got " +
                           std::to_string(n));
  }
  if (requires_isolate_free(kind) && has_isolated_vertex(g)) return {};
  auto accept = [&](VertexSet s) { return check_set(g, s, kind); };
  if (kind == ParamKind::Alpha) {
    for (int k = n; k >= 0; --k) {
      if (auto s = first_subset(n, k, accept)) return {k, *s};
    }
  } else {
    for (int k = 0; k <= n; ++k) {
      if (auto s = first_subset(n, k, accept)) return {k, *s};
    }
  }
  // Every parameter is attained by V (or the empty set for ALPHA).
  throw std::logic_error("naive solver found no feasible set");
}

}  // namespace oidom
