#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oidom/classic.hpp"
#include "oidom/enumerate.hpp"
#include "oidom/graph.hpp"
#include "oidom/graph6.hpp"
#include "oidom/solvers.hpp"

using namespace oidom;

namespace {

int value_of(const Graph& g, ParamKind kind) { return solve(g, kind).value.value(); }

bool is_minimal_witness(const Graph& g, const ParamResult& r, ParamKind kind) {
  if (!check_set(g, r.certificate, kind)) return false;
  if (r.certificate.size() != *r.value) return false;
  if (kind == ParamKind::Alpha) return true;
  // No smaller valid set obtained by dropping one vertex.
  for (int v : r.certificate) {
    VertexSet smaller = r.certificate;
    smaller.erase(v);
    if (check_set(g, smaller, kind)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parameter keys round trip") {
  for (ParamKind k : kAllParams) {
    CHECK(parse_param_key(param_key(k)) == k);
  }
  CHECK_FALSE(parse_param_key("gamma-2").has_value());
  CHECK(param_symbol(ParamKind::TwoOid) == "gamma_2^oi");
}

TEST_CASE("values on small named graphs") {
  const Graph c6 = classic::cycle(6);
  const ParamResult two = solve(c6, ParamKind::TwoOid);
  CHECK(two.value == 3);
  CHECK(two.certificate == VertexSet{0, 2, 4});
  CHECK(value_of(c6, ParamKind::Toid) == 4);

  CHECK(value_of(classic::cycle(5), ParamKind::TwoOid) == 3);
  CHECK(value_of(classic::star(5), ParamKind::TwoOid) == 4);
  CHECK(value_of(classic::path(4), ParamKind::Doid) == 4);
  CHECK(value_of(classic::complete(5), ParamKind::TwoOid) == 4);
  CHECK(value_of(classic::empty(5), ParamKind::TwoOid) == 5);
  CHECK(value_of(classic::matching(2), ParamKind::Toid) == 4);
  CHECK(value_of(classic::complete(3), ParamKind::Alpha) == 1);
  CHECK(value_of(classic::complete(2), ParamKind::TwoOid) == 2);
  CHECK(solve_naive(classic::cycle(4), ParamKind::Doid).value == 3);
  CHECK(value_of(classic::cycle(4), ParamKind::Gamma) == 2);
  CHECK(value_of(classic::path(5), ParamKind::GammaT) == 3);
  CHECK(value_of(classic::cycle(5), ParamKind::GammaX2) == 4);
}

TEST_CASE("empty graph has value zero everywhere") {
  for (ParamKind k : kAllParams) {
    const ParamResult r = solve(Graph(0), k);
    CHECK(r.value == 0);
    CHECK(r.certificate.empty());
  }
}

TEST_CASE("isolated vertices make the total-type parameters undefined") {
  const Graph g = classic::disjoint_union(classic::path(3), Graph(1));
  for (ParamKind k : kAllParams) {
    const ParamResult r = solve(g, k);
    CHECK(r.defined() == !requires_isolate_free(k));
    CHECK(solve_naive(g, k) == r);
  }
  CHECK(requires_isolate_free(ParamKind::Toid));
  CHECK(requires_isolate_free(ParamKind::Doid));
  CHECK_FALSE(requires_isolate_free(ParamKind::TwoOid));
}

TEST_CASE("set validation") {
  const Graph c6 = classic::cycle(6);
  CHECK(check_set(c6, VertexSet{0, 2, 4}, ParamKind::TwoOid));
  CHECK_FALSE(check_set(c6, VertexSet{0, 2, 4}, ParamKind::Toid));
  CHECK(check_set(c6, VertexSet{0, 1, 3, 4}, ParamKind::Toid));
  CHECK_FALSE(check_set(c6, VertexSet{0, 1, 2}, ParamKind::TwoOid));
  CHECK(first_violation(c6, VertexSet{0, 1, 2}, ParamKind::TwoOid).has_value());
  CHECK_FALSE(first_violation(c6, VertexSet{0, 2, 4}, ParamKind::TwoOid).has_value());
  CHECK(check_set(c6, c6.vertices(), ParamKind::Doid));
  CHECK_FALSE(check_set(c6, VertexSet{0, 7}, ParamKind::Gamma));
  CHECK(first_violation(c6, VertexSet{0, 7}, ParamKind::Gamma)->find("outside") != std::string::npos);
  CHECK(check_set(c6, VertexSet{1, 3, 5}, ParamKind::Alpha));
  CHECK_FALSE(check_set(c6, VertexSet{1, 2}, ParamKind::Alpha));
}

TEST_CASE("branch and bound agrees with the subset scan on every labeled graph up to order 6") {
  const ParamKind heavy[] = {ParamKind::Toid, ParamKind::TwoOid, ParamKind::Doid, ParamKind::Alpha};
  const ParamKind light[] = {ParamKind::Gamma, ParamKind::GammaT, ParamKind::GammaX2};
  std::uint64_t mismatches = 0;
  for (int n = 0; n <= 6; ++n) {
    for_each_labeled(n, [&](const Graph& g) {
      for (ParamKind k : heavy) {
        if (solve(g, k) != solve_naive(g, k)) {
          ++mismatches;
          MESSAGE(to_graph6(g) << " " << param_key(k));
        }
      }
      if (n > 5) return;
      for (ParamKind k : light) {
        if (solve(g, k) != solve_naive(g, k)) ++mismatches;
      }
    });
  }
  CHECK(mismatches == 0);
}

TEST_CASE("certificates are valid and vertex-minimal") {
  for (const Graph& g : canonical_graphs(6)) {
    for (ParamKind k : kAllParams) {
      const ParamResult r = solve(g, k);
      if (!r.defined()) continue;
      CHECK(is_minimal_witness(g, r, k));
    }
  }
}

TEST_CASE("inequalities between the parameters") {
  for (const Graph& g : canonical_graphs(6)) {
    const int n = g.order();
    const int two = value_of(g, ParamKind::TwoOid);
    const int alpha = value_of(g, ParamKind::Alpha);
    // The complement of a 2OID set is independent.
    CHECK(two >= n - alpha);
    CHECK(value_of(g, ParamKind::Gamma) <= two);
    if (has_isolated_vertex(g)) continue;
    const int toid = value_of(g, ParamKind::Toid);
    const int doid = value_of(g, ParamKind::Doid);
    CHECK(doid >= toid);
    CHECK(doid >= two);
    CHECK(toid >= value_of(g, ParamKind::GammaT));
    CHECK(doid >= value_of(g, ParamKind::GammaX2));
    if (degree_profile(g).min_degree >= 2) CHECK(two == n - alpha);
  }
}

TEST_CASE("values are invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = labeled_graph(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.relabeled(perm);
    for (ParamKind k : kAllParams) {
      CHECK(solve(g, k).value == solve(h, k).value);
    }
  }
}

TEST_CASE("larger graphs stay tractable") {
  CHECK(value_of(classic::cycle(30), ParamKind::TwoOid) == 15);
  CHECK(value_of(classic::cycle(30), ParamKind::Toid) == 20);
  CHECK(value_of(classic::complete_bipartite(5, 20), ParamKind::TwoOid) == 5);
  CHECK(value_of(classic::path(40), ParamKind::Alpha) == 20);
}

TEST_CASE("node budget") {
  const Graph g = classic::cycle(40);
  CHECK_FALSE(solve_bounded(g, ParamKind::Toid, SearchBudget{5}).has_value());
  const auto full = solve_bounded(classic::cycle(8), ParamKind::Toid, SearchBudget{0});
  REQUIRE(full.has_value());
  CHECK(full->value == 6);
}

TEST_CASE("subset scan refuses large inputs") {
  CHECK_THROWS_AS(solve_naive(classic::cycle(21), ParamKind::Toid), SolverGuardError);
  CHECK_NOTHROW(solve_naive(classic::cycle(12), ParamKind::Toid, 12));
}
