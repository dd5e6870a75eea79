#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oidom/classic.hpp"
#include "oidom/families.hpp"
#include "oidom/family_json.hpp"
#include "oidom/graph6.hpp"
#include "oidom/isomorphism.hpp"
#include "oidom/solvers.hpp"

using namespace oidom;

namespace {

int value_of(const Graph& g, ParamKind kind) { return solve(g, kind).value.value(); }

int co_value(const Graph& g, ParamKind kind) { return value_of(g.complement(), kind); }

Graph shuffled(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

// Right-hand side of the delta* bound, scaled by (2 d* - 1).
int deltastar_numerator(const Graph& g) {
  const DegreeProfile p = degree_profile(g);
  return 2 * p.delta_star * g.order() - 2 * g.size() + p.leaves.size() - p.supports.size();
}

}  // namespace

TEST_CASE("family keys round trip") {
  for (FamilyTag t : {FamilyTag::Lambda, FamilyTag::Phi, FamilyTag::Psi, FamilyTag::Omega, FamilyTag::GCal,
                      FamilyTag::Theta, FamilyTag::HFamily, FamilyTag::Grid, FamilyTag::Classic}) {
    CHECK(parse_family_key(family_key(t)) == t);
  }
  CHECK_FALSE(parse_family_key("sigma").has_value());
  for (Fixture f : kAllFixtures) {
    CHECK(parse_fixture_key(fixture_key(f)) == f);
    CHECK(fixture(fixture_key(f)) == fixture(f));
  }
  CHECK_THROWS_AS(fixture("H3"), FamilyError);
}

TEST_CASE("lambda members attain the toid product lower bound") {
  const Graph g = generate(LambdaSpec{1, 1, 1});
  CHECK(g.order() == 5);
  CHECK(value_of(g, ParamKind::Toid) * co_value(g, ParamKind::Toid) == 4);
  CHECK(in_lambda(g));
  CHECK(in_lambda(shuffled(g, 3)));
  CHECK_FALSE(in_lambda(classic::cycle(5)));
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (int c = 1; c <= 2; ++c) {
        const Graph h = generate(LambdaSpec{a, b, c});
        const int n = h.order();
        CHECK(value_of(h, ParamKind::Toid) * co_value(h, ParamKind::Toid) == 2 * n - 6);
        CHECK(in_lambda(h));
      }
    }
  }
  CHECK_THROWS_AS(generate(LambdaSpec{0, 1, 1}), FamilyError);
}

TEST_CASE("phi members have toid sum n - 1") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 6 + static_cast<int>(seed % 4);
    const int p = 3 + static_cast<int>(seed % 2);
    const Graph g = generate(PhiSpec{n, p, std::nullopt, seed, kDefaultRetryCap});
    CHECK(g.order() == n);
    CHECK(in_phi(g));
    CHECK(in_phi(shuffled(g, seed)));
    CHECK(value_of(g, ParamKind::Toid) + co_value(g, ParamKind::Toid) == n - 1);
  }
  CHECK_FALSE(in_phi(classic::cycle(6)));
  CHECK_THROWS_AS(generate(PhiSpec{5, 5, std::nullopt}), FamilyError);
}

TEST_CASE("explicit cross edges are validated") {
  // J vertex 4 has no neighbour in K_p - x.
  CHECK_THROWS_AS(generate(PhiSpec{5, 3, std::vector<Edge>{{1, 3}}}), FamilyError);
  const Graph ok = generate(PhiSpec{5, 3, std::vector<Edge>{{1, 3}, {2, 4}}});
  CHECK(in_phi(ok));
}

TEST_CASE("psi needs at least ten vertices") {
  for (int n = 4; n <= 9; ++n) {
    CHECK_THROWS_AS(generate(PsiSpec{n, std::nullopt}), FamilyError);
  }
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = generate(PsiSpec{10 + static_cast<int>(seed % 2), std::nullopt, seed});
    CHECK(in_psi(g));
    CHECK(in_psi(shuffled(g, seed + 100)));
    CHECK(value_of(g, ParamKind::TwoOid) * co_value(g, ParamKind::TwoOid) == 3 * g.order() - 12);
  }
}

TEST_CASE("psi fixture") {
  const Graph g = fixture(Fixture::PsiFig1);
  CHECK(g.order() == 10);
  CHECK(in_psi(g));
  CHECK(value_of(g, ParamKind::TwoOid) == 3);
  CHECK(co_value(g, ParamKind::TwoOid) == 6);
  CHECK(value_of(g, ParamKind::TwoOid) * co_value(g, ParamKind::TwoOid) == 18);
}

TEST_CASE("omega fixture meets the delta* bound") {
  const Graph g = fixture(Fixture::OmegaFig3);
  const DegreeProfile p = degree_profile(g);
  CHECK(p.delta_star == 3);
  const int doid = value_of(g, ParamKind::Doid);
  CHECK(doid == 11);
  CHECK(doid * (2 * p.delta_star - 1) == deltastar_numerator(g));
  CHECK(in_omega(g));
  CHECK(in_omega(shuffled(g, 9)));
}

TEST_CASE("sampled omega members meet the delta* bound") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    OmegaSpec spec;
    spec.a = 1 + static_cast<int>(seed % 2);
    spec.b = static_cast<int>(seed % 3 == 0);
    spec.p = 2;
    spec.r = 2;
    spec.extra_leaves.assign(spec.b, 1);
    spec.seed = seed;
    const Graph g = generate(spec);
    const DegreeProfile p = degree_profile(g);
    REQUIRE(p.delta_star >= 2);
    CHECK(value_of(g, ParamKind::Doid) * (2 * p.delta_star - 1) == deltastar_numerator(g));
    CHECK(in_omega(g));
  }
  CHECK(in_omega(classic::star(4)));
  CHECK(in_omega(classic::matching(2)));
  CHECK_FALSE(in_omega(classic::cycle(5)));
  CHECK_THROWS_AS(in_omega(classic::cycle(17)), FamilyError);
}

TEST_CASE("P-Q family") {
  CHECK(in_gcal(classic::path(3)));
  CHECK(value_of(classic::path(3), ParamKind::TwoOid) == 2);
  CHECK_FALSE(in_gcal(classic::complete(3)));
  CHECK_FALSE(in_gcal(classic::empty(3)));
  CHECK(in_gcal(classic::cycle(4)));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GCalSpec spec{2 + static_cast<int>(seed % 3), 3 + static_cast<int>(seed % 2), std::nullopt, seed};
    const Graph g = generate(spec);
    CHECK(in_gcal(g));
    CHECK(2 * value_of(g, ParamKind::TwoOid) == 2 * g.order() - g.size());
  }
  CHECK_THROWS_AS(generate(GCalSpec{1, 1, std::nullopt}), FamilyError);
}

TEST_CASE("theta members have doid sum 2n - 1") {
  for (int q = 3; q <= 6; ++q) {
    const Graph g = generate(ThetaSpec{q});
    const int n = g.order();
    CHECK(n == q + 2);
    CHECK(in_theta(g));
    CHECK(in_theta(shuffled(g, q)));
    CHECK(value_of(g, ParamKind::Doid) + co_value(g, ParamKind::Doid) == 2 * n - 1);
  }
  CHECK_FALSE(in_theta(classic::path(5)));
}

TEST_CASE("H family attains the max-degree bound") {
  const Graph g = generate(HSpec{3, 1});
  CHECK(g.order() == 9);
  CHECK(value_of(g, ParamKind::TwoOid) == 6);
  CHECK(in_h_family(g));
  CHECK(in_h_family(shuffled(g, 1)));
  for (int k = 2; k <= 4; ++k) {
    for (int p = 0; p <= 2; ++p) {
      const Graph h = generate(HSpec{k, p});
      const int delta = degree_profile(h).max_degree;
      CHECK(value_of(h, ParamKind::TwoOid) * delta == (delta - 1) * h.order());
    }
  }
  CHECK_FALSE(in_h_family(classic::cycle(7)));
}

TEST_CASE("grids") {
  for (int k = 1; k <= 3; ++k) {
    const Graph g = generate(GridSpec{k});
    CHECK(g.order() == 6 * k);
    // Minimum degree 2, so 2oid = n - alpha = 3k; the 4k value belongs to
    // toid and doid.
    CHECK(value_of(g, ParamKind::TwoOid) == 3 * k);
    CHECK(value_of(g, ParamKind::Doid) == 4 * k);
    CHECK(value_of(g, ParamKind::Toid) == 4 * k);
    CHECK(value_of(g, ParamKind::GammaT) == 2 * k);
    CHECK(in_grid(g));
    CHECK(in_grid(shuffled(g, k)));
  }
  CHECK_FALSE(in_grid(classic::cycle(6)));
  CHECK_FALSE(in_grid(classic::cartesian_product(classic::path(4), classic::path(2))));
}

TEST_CASE("cubic claw-free fixtures") {
  const Graph h1 = fixture(Fixture::H1);
  const Graph h2 = fixture(Fixture::H2);
  CHECK(h1.order() == 12);
  CHECK(h2.order() == 10);
  for (const Graph& g : {h1, h2}) {
    CHECK(is_regular(g, 3));
    CHECK(is_claw_free(g));
    CHECK(is_connected(g));
  }
  CHECK(value_of(h1, ParamKind::TwoOid) == 8);
  CHECK(value_of(h2, ParamKind::TwoOid) == 6);
  for (ParamKind k : {ParamKind::Toid, ParamKind::Doid}) {
    CHECK(value_of(h1, k) == 8);
    CHECK(value_of(h2, k) == 6);
  }
}

TEST_CASE("classic recognizers") {
  CHECK(recognize_classic(classic::complete(4), "complete"));
  CHECK(recognize_classic(classic::star(6), "star"));
  CHECK(recognize_classic(classic::complete_bipartite(2, 3), "biclique"));
  CHECK_FALSE(recognize_classic(classic::path(4), "star"));
  CHECK(recognize_classic(shuffled(classic::path(6), 2), "path"));
  CHECK(recognize(generate(ThetaSpec{4}), FamilyTag::Theta));
  CHECK_THROWS_AS(recognize(classic::path(3), FamilyTag::Classic), FamilyError);
  CHECK_THROWS_AS(recognize_classic(classic::path(3), "petersen"), FamilyError);
  CHECK(generate(ClassicSpec{"biclique", 0, 2, 3}) == classic::complete_bipartite(2, 3));
}

TEST_CASE("specs survive a JSON round trip") {
  OmegaSpec omega;
  omega.a = 2;
  omega.b = 1;
  omega.p = 3;
  omega.r = 3;
  omega.extra_leaves = {2};
  omega.seed = 17;
  const FamilySpec specs[] = {
      LambdaSpec{2, 1, 3},
      PhiSpec{7, 4, std::nullopt, 5},
      PsiSpec{10, std::nullopt, 2},
      omega,
      GCalSpec{2, 3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}},
      ThetaSpec{5},
      HSpec{3, 2},
      GridSpec{2},
      ClassicSpec{"cycle", 7},
  };
  for (const FamilySpec& s : specs) {
    const nlohmann::json j = family_spec_to_json(s);
    const FamilySpec back = family_spec_from_json(j);
    CHECK(family_tag(back) == family_tag(s));
    CHECK(family_spec_to_json(back) == j);
    CHECK(generate(back) == generate(s));
  }
  CHECK_THROWS_AS(family_spec_from_json(nlohmann::json{{"family", "sigma"}}), FamilyError);
  CHECK_THROWS_AS(family_spec_from_json(nlohmann::json{{"family", "theta"}, {"q", "four"}}), FamilyError);
}

TEST_CASE("generation is reproducible per seed") {
  const PhiSpec spec{9, 4, std::nullopt, 42};
  CHECK(generate(spec) == generate(spec));
  const PsiSpec psi{12, std::nullopt, 42};
  CHECK(generate(psi) == generate(psi));
}
