#include <string>

#include "oidom/reductions.hpp"

namespace oidom {

std::string_view reduction_key(ReductionKind kind) {
  return kind == ReductionKind::TwoOidGadget ? "2oid" : "doid";
}

std::optional<ReductionKind> parse_reduction_key(std::string_view key) {
  if (key == "2oid") return ReductionKind::TwoOidGadget;
  if (key == "doid") return ReductionKind::DoidGadget;
  return std::nullopt;
}

ParamKind target_param(ReductionKind kind) {
  return kind == ReductionKind::TwoOidGadget ? ParamKind::TwoOid : ParamKind::Doid;
}

std::string_view status_key(ReductionStatus status) {
  switch (status) {
    case ReductionStatus::Holds: return "holds";
    case ReductionStatus::Fails: return "fails";
    case ReductionStatus::Unverified: return "unverified";
  }
  return "?";
}

Graph reduce(const Graph& g, ReductionKind kind) {
  const int n = g.order();
  if (n == 0) throw GraphError("reduction needs a nonempty graph");
  if (has_isolated_vertex(g)) throw GraphError("reduction needs minimum degree at least 1");
  if (6 * n > Graph::kMaxOrder) {
    throw GraphError("gadget order " + std::to_string(6 * n) + " exceeds the vertex cap " +
                     std::to_string(Graph::kMaxOrder));
  }
  GraphBuilder b(6 * n);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (int i = 0; i < n; ++i) {
    const int base = n + 5 * i;
    for (int a = base; a < base + 2; ++a) {
      for (int t = base + 2; t < base + 5; ++t) b.add_edge(a, t);
    }
    b.add_edge(i, base);
    if (kind == ReductionKind::DoidGadget) b.add_edge(base, base + 1);
  }
  return b.build();
}

ReductionReport verify_reduction(const Graph& g, ReductionKind kind, SearchBudget budget) {
  const Graph gadget = reduce(g, kind);
  ReductionReport r;
  r.order = g.order();
  const auto alpha = solve_bounded(g, ParamKind::Alpha, budget);
  if (!alpha) return r;
  r.alpha = alpha->value;
  r.expected = 3 * r.order - *r.alpha;
  const auto param = solve_bounded(gadget, target_param(kind), budget);
  if (!param) return r;
  r.param_on_gadget = param->value;
  r.status = (r.param_on_gadget == r.expected) ? ReductionStatus::Holds : ReductionStatus::Fails;
  return r;
}

}  // namespace oidom
