#include <doctest.h>

#include "oidom/classic.hpp"
#include "oidom/enumerate.hpp"
#include "oidom/graph6.hpp"
#include "oidom/reductions.hpp"
#include "oidom/solvers.hpp"

using namespace oidom;

namespace {

int gadget_value(const Graph& g, ReductionKind kind) {
  return solve(reduce(g, kind), target_param(kind)).value.value();
}

}  // namespace

TEST_CASE("reduction keys") {
  CHECK(parse_reduction_key("2oid") == ReductionKind::TwoOidGadget);
  CHECK(parse_reduction_key("doid") == ReductionKind::DoidGadget);
  CHECK_FALSE(parse_reduction_key("toid").has_value());
  CHECK(target_param(ReductionKind::DoidGadget) == ParamKind::Doid);
  CHECK(status_key(ReductionStatus::Unverified) == "unverified");
}

TEST_CASE("gadget values on small graphs") {
  CHECK(gadget_value(classic::path(2), ReductionKind::TwoOidGadget) == 5);
  CHECK(gadget_value(classic::complete(3), ReductionKind::TwoOidGadget) == 8);
  CHECK(gadget_value(classic::cycle(5), ReductionKind::TwoOidGadget) == 13);
  CHECK(gadget_value(classic::path(2), ReductionKind::DoidGadget) == 5);
  CHECK(gadget_value(classic::star(4), ReductionKind::DoidGadget) == 9);
  CHECK(gadget_value(classic::cycle(4), ReductionKind::DoidGadget) == 10);
}

TEST_CASE("gadget shape") {
  const Graph g = classic::cycle(5);
  const Graph two = reduce(g, ReductionKind::TwoOidGadget);
  const Graph dbl = reduce(g, ReductionKind::DoidGadget);
  const int n = g.order();
  CHECK(two.order() == 6 * n);
  CHECK(two.size() == g.size() + 7 * n);
  CHECK(dbl.size() == g.size() + 8 * n);
  for (int i = 0; i < n; ++i) {
    const int base = n + 5 * i;
    CHECK(two.adjacent(i, base));
    CHECK_FALSE(two.adjacent(base, base + 1));
    CHECK(dbl.adjacent(base, base + 1));
    for (int b = base + 2; b < base + 5; ++b) {
      CHECK(two.degree(b) == 2);
      CHECK(two.neighbors(b) == VertexSet{base, base + 1});
    }
  }
  CHECK(two.induced(VertexSet{0, 1, 2, 3, 4}) == g);
}

TEST_CASE("gadget inputs are validated") {
  CHECK_THROWS_AS(reduce(Graph(0), ReductionKind::TwoOidGadget), GraphError);
  CHECK_THROWS_AS(reduce(classic::empty(3), ReductionKind::TwoOidGadget), GraphError);
  CHECK_THROWS_AS(reduce(classic::cycle(11), ReductionKind::DoidGadget), GraphError);
  CHECK_NOTHROW(reduce(classic::cycle(10), ReductionKind::DoidGadget));
}

TEST_CASE("identity holds on every isolate-free graph up to order 5") {
  int checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : canonical_graphs(n)) {
      if (has_isolated_vertex(g)) continue;
      for (ReductionKind kind : {ReductionKind::TwoOidGadget, ReductionKind::DoidGadget}) {
        const ReductionReport r = verify_reduction(g, kind);
        CHECK(r.order == n);
        CHECK(r.alpha == solve(g, ParamKind::Alpha).value);
        if (!r.identity_holds()) FAIL(to_graph6(g) << " " << reduction_key(kind));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("decision versions transfer") {
  // alpha(G) >= k  iff  param(G') <= 3n - k.
  for (const Graph& g : canonical_graphs(4)) {
    if (has_isolated_vertex(g)) continue;
    const int alpha = solve(g, ParamKind::Alpha).value.value();
    const int n = g.order();
    for (ReductionKind kind : {ReductionKind::TwoOidGadget, ReductionKind::DoidGadget}) {
      const int v = gadget_value(g, kind);
      for (int k = 0; k <= n; ++k) {
        CHECK((alpha >= k) == (v <= 3 * n - k));
      }
    }
  }
}

TEST_CASE("exhausted budget leaves the identity unverified") {
  const ReductionReport r = verify_reduction(classic::cycle(8), ReductionKind::TwoOidGadget, SearchBudget{3});
  CHECK(r.status == ReductionStatus::Unverified);
  CHECK_FALSE(r.identity_holds());
}
