#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "oidom/classic.hpp"
#include "oidom/families.hpp"

namespace oidom {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(const std::string& what) { throw FamilyError(what); }

// mt19937_64 output is fixed by the standard; the reduction below avoids the
// implementation-defined std distributions so seeds replay everywhere.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
  bool coin() { return (engine_() >> 63) != 0; }
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) std::swap(items[i], items[below(i + 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

void check_retry_cap(int cap) {
  if (cap < 1) fail("retry cap must be positive");
}

// (i)/(ii) conditions shared by Phi (floor 1, slack 1) and Psi (floor 2, slack 2).
bool cross_conditions_hold(const Graph& g, VertexSet clique_rest, VertexSet outer, int floor, int slack) {
  for (int j : outer) {
    if ((g.neighbors(j) & clique_rest).size() < floor) return false;
  }
  for (int k : clique_rest) {
    if ((g.neighbors(k) & outer).size() > outer.size() - slack) return false;
  }
  return true;
}

Graph clique_with_apex_and_cross(int n, int p, const std::vector<Edge>& cross) {
  GraphBuilder b(n);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) b.add_edge(i, j);
  }
  for (const Edge& e : cross) b.add_edge(e.u, e.v);
  return b.build();
}

std::vector<Edge> normalized_cross_edges(const std::vector<Edge>& edges, int n, int p, const char* family) {
  std::vector<Edge> out;
  for (Edge e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.u >= p || e.v < p || e.v >= n) {
      fail(std::string(family) + " cross edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
           ") must join a non-apex clique vertex to an outer vertex");
    }
    out.push_back(e);
  }
  return out;
}

Graph clique_cross_family(int n, int p, const std::optional<std::vector<Edge>>& explicit_edges, std::uint64_t seed,
                          int retry_cap, int floor, int slack, const char* family) {
  const VertexSet clique_rest = VertexSet::range(p) - VertexSet::single(0);
  const VertexSet outer = VertexSet::range(n) - VertexSet::range(p);
  if (explicit_edges) {
    Graph g = clique_with_apex_and_cross(n, p, normalized_cross_edges(*explicit_edges, n, p, family));
    if (!cross_conditions_hold(g, clique_rest, outer, floor, slack)) {
      fail(std::string(family) + " cross edges violate the attachment conditions");
    }
    return g;
  }
  check_retry_cap(retry_cap);
  SeededRng rng(seed);
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    std::vector<Edge> cross;
    for (int j = p; j < n; ++j) {
      for (int k = 1; k < p; ++k) {
        if (rng.coin()) cross.push_back({k, j});
      }
    }
    Graph g = clique_with_apex_and_cross(n, p, cross);
    if (cross_conditions_hold(g, clique_rest, outer, floor, slack)) return g;
  }
  fail(std::string(family) + ": no admissible cross edges found within the retry cap");
}

Graph generate_lambda(const LambdaSpec& s) {
  if (s.a_size < 1 || s.b_size < 1 || s.c_size < 1) fail("lambda classes A, B, C must be nonempty");
  const int n = 2 + s.a_size + s.b_size + s.c_size;
  GraphBuilder b(n);
  b.add_edge(0, 1);
  int v = 2;
  for (int i = 0; i < s.a_size; ++i) b.add_edge(0, v++);
  for (int i = 0; i < s.b_size; ++i) b.add_edge(1, v++);
  for (int i = 0; i < s.c_size; ++i, ++v) {
    b.add_edge(0, v);
    b.add_edge(1, v);
  }
  return b.build();
}

Graph generate_phi(const PhiSpec& s) {
  if (s.p < 3 || s.p > s.n - 2) {
    fail("phi needs 3 <= p <= n - 2, got n=" + std::to_string(s.n) + " p=" + std::to_string(s.p));
  }
  if (s.n > Graph::kMaxOrder) fail("phi order exceeds the vertex cap");
  return clique_cross_family(s.n, s.p, s.cross_edges, s.seed, s.retry_cap, 1, 1, "phi");
}

Graph generate_psi(const PsiSpec& s) {
  if (s.n < 6) fail("psi needs n >= 6, got " + std::to_string(s.n));
  if (s.n > Graph::kMaxOrder) fail("psi order exceeds the vertex cap");
  const int r = s.n - 4;
  // Each R vertex needs two of the three clique neighbours (2r incidences)
  // while each clique vertex takes at most r - 2 (3(r - 2) in total).
  if (2 * r > 3 * (r - 2)) {
    fail("psi is empty for n=" + std::to_string(s.n) + ": |R|=" + std::to_string(r) +
         " cannot satisfy both attachment conditions (needs |R| >= 6)");
  }
  if (s.cross_edges) return clique_cross_family(s.n, 4, s.cross_edges, s.seed, s.retry_cap, 2, 2, "psi");
  check_retry_cap(s.retry_cap);
  SeededRng rng(s.seed);
  const VertexSet clique_rest{1, 2, 3};
  const VertexSet outer = VertexSet::range(s.n) - VertexSet::range(4);
  for (int attempt = 0; attempt < s.retry_cap; ++attempt) {
    std::vector<Edge> cross;
    for (int j = 4; j < s.n; ++j) {
      // Two or three of the clique vertices 1..3.
      const int pattern = rng.below(4);
      for (int k = 1; k <= 3; ++k) {
        if (pattern == 3 || pattern != k - 1) cross.push_back({k, j});
      }
    }
    Graph g = clique_with_apex_and_cross(s.n, 4, cross);
    if (cross_conditions_hold(g, clique_rest, outer, 2, 2)) return g;
  }
  fail("psi: no admissible cross edges found within the retry cap");
}

Graph build_omega(const OmegaSpec& s, const std::vector<std::vector<int>>& attach) {
  const int pairs = s.a + s.b;
  int extra = 0;
  for (int k : s.extra_leaves) extra += k;
  const int n = 2 * pairs + s.p + extra;
  GraphBuilder g(n);
  for (int i = 0; i < pairs; ++i) g.add_edge(2 * i, 2 * i + 1);
  const int u0 = 2 * pairs;
  for (int u = 0; u < s.p; ++u) {
    for (int t : attach[u]) g.add_edge(u0 + u, t);
  }
  int leaf = u0 + s.p;
  for (int i = 0; i < s.b; ++i) {
    for (int k = 0; k < s.extra_leaves[i]; ++k) g.add_edge(2 * (s.a + i), leaf++);
  }
  return g.build();
}

Graph generate_omega(const OmegaSpec& s) {
  if (s.a < 0 || s.b < 0 || s.a + s.b < 1) fail("omega needs a, b >= 0 and a + b >= 1");
  if (s.r < 2) fail("omega needs r >= 2");
  if (s.p < 0) fail("omega needs p >= 0");
  if (2 * s.a * (s.r - 1) > s.p * s.r) fail("omega needs 2a(r-1) <= pr");
  if (static_cast<int>(s.extra_leaves.size()) != s.b) fail("omega needs exactly b extra-leaf counts");
  int extra = 0;
  for (int k : s.extra_leaves) {
    if (k < 0) fail("omega extra-leaf counts must be nonnegative");
    extra += k;
  }
  if (2 * (s.a + s.b) + s.p + extra > Graph::kMaxOrder) fail("omega order exceeds the vertex cap");

  // Allowed targets: both ends of the first a pairs, the first end of the rest.
  std::vector<int> allowed;
  for (int i = 0; i < s.a; ++i) {
    allowed.push_back(2 * i);
    allowed.push_back(2 * i + 1);
  }
  for (int i = 0; i < s.b; ++i) allowed.push_back(2 * (s.a + i));
  if (s.p > 0 && static_cast<int>(allowed.size()) < s.r) {
    fail("omega: only " + std::to_string(allowed.size()) + " allowed targets for r=" + std::to_string(s.r));
  }
  const int b_class = 2 * s.a;  // allowed[0..b_class) need degree >= r

  auto degrees_ok = [&](const std::vector<std::vector<int>>& attach) {
    std::vector<int> hits(2 * (s.a + s.b), 0);
    for (const auto& list : attach) {
      for (int t : list) ++hits[t];
    }
    for (int i = 0; i < b_class; ++i) {
      if (hits[allowed[i]] + 1 < s.r) return false;
    }
    return true;
  };

  if (s.attachments) {
    const auto& attach = *s.attachments;
    if (static_cast<int>(attach.size()) != s.p) fail("omega needs one attachment list per u vertex");
    for (const auto& list : attach) {
      if (static_cast<int>(list.size()) != s.r) fail("omega attachment lists must have exactly r entries");
      std::vector<int> sorted = list;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("omega attachment repeats a target");
      for (int t : list) {
        if (std::find(allowed.begin(), allowed.end(), t) == allowed.end()) {
          fail("omega attachment target " + std::to_string(t) + " is not in the allowed set");
        }
      }
    }
    if (!degrees_ok(attach)) fail("omega attachments leave a B vertex with degree below r");
    return build_omega(s, attach);
  }

  check_retry_cap(s.retry_cap);
  SeededRng rng(s.seed);
  for (int attempt = 0; attempt < s.retry_cap; ++attempt) {
    // Proposal: each u takes the r targets with the largest outstanding
    // degree deficit, ties broken by a fresh random order.
    std::vector<int> deficit(2 * (s.a + s.b), 0);
    for (int i = 0; i < b_class; ++i) deficit[allowed[i]] = s.r - 1;
    std::vector<std::vector<int>> attach(s.p);
    for (int u = 0; u < s.p; ++u) {
      std::vector<int> order = allowed;
      rng.shuffle(order);
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return deficit[x] > deficit[y]; });
      attach[u].assign(order.begin(), order.begin() + s.r);
      std::sort(attach[u].begin(), attach[u].end());
      for (int t : attach[u]) deficit[t] = std::max(0, deficit[t] - 1);
    }
    if (degrees_ok(attach)) return build_omega(s, attach);
  }
  fail("omega: no admissible attachment found within the retry cap");
}

Graph generate_gcal(const GCalSpec& s) {
  if (s.p_size < 1 || s.q_size < 2) fail("gcal needs |P| >= 1 and |Q| >= 2");
  if (s.p_size + s.q_size > Graph::kMaxOrder) fail("gcal order exceeds the vertex cap");
  std::vector<std::pair<int, int>> pairs;
  if (s.pairs) {
    pairs = *s.pairs;
    if (static_cast<int>(pairs.size()) != s.p_size) fail("gcal needs one Q pair per P vertex");
    for (auto [x, y] : pairs) {
      if (x == y || x < 0 || y < 0 || x >= s.q_size || y >= s.q_size) fail("gcal pair must name two distinct Q vertices");
    }
  } else {
    SeededRng rng(s.seed);
    for (int i = 0; i < s.p_size; ++i) {
      const int x = rng.below(s.q_size);
      int y = rng.below(s.q_size - 1);
      if (y >= x) ++y;
      pairs.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  GraphBuilder b(s.p_size + s.q_size);
  for (int i = 0; i < s.p_size; ++i) {
    b.add_edge(i, s.p_size + pairs[i].first);
    b.add_edge(i, s.p_size + pairs[i].second);
  }
  return b.build();
}

Graph generate_theta(const ThetaSpec& s) {
  if (s.q < 3) fail("theta needs a clique of at least 3 vertices");
  if (s.q + 2 > Graph::kMaxOrder) fail("theta order exceeds the vertex cap");
  GraphBuilder b(s.q + 2);
  for (int i = 0; i < s.q; ++i) {
    for (int j = i + 1; j < s.q; ++j) b.add_edge(i, j);
  }
  for (int i = 0; i + 1 < s.q; ++i) b.add_edge(s.q, i);
  b.add_edge(s.q, s.q + 1);
  return b.build();
}

Graph generate_h(const HSpec& s) {
  if (s.k < 2) fail("h family needs k >= 2 (cycle of length 2k)");
  if (s.p < 0) fail("h family needs p >= 0");
  const int n = 2 * s.k + s.k * s.p;
  if (n > Graph::kMaxOrder) fail("h family order exceeds the vertex cap");
  GraphBuilder b(n);
  for (int i = 0; i < 2 * s.k; ++i) b.add_edge(i, (i + 1) % (2 * s.k));
  int next = 2 * s.k;
  for (int i = 0; i < s.k; ++i) {
    const int first = next;
    for (int x = 0; x < s.p; ++x) {
      for (int y = x + 1; y < s.p; ++y) b.add_edge(first + x, first + y);
      b.add_edge(first + x, 2 * i);
      b.add_edge(first + x, 2 * i + 1);
    }
    next += s.p;
  }
  return b.build();
}

Graph generate_grid(const GridSpec& s) {
  if (s.k < 1) fail("grid needs k >= 1");
  if (6 * s.k > Graph::kMaxOrder) fail("grid order exceeds the vertex cap");
  return classic::cartesian_product(classic::path(3 * s.k), classic::path(2));
}

Graph generate_classic(const ClassicSpec& s) {
  try {
    if (s.name == "complete") return classic::complete(s.n);
    if (s.name == "empty") return classic::empty(s.n);
    if (s.name == "cycle") return classic::cycle(s.n);
    if (s.name == "path") return classic::path(s.n);
    if (s.name == "star") return classic::star(s.n);
    if (s.name == "matching") {
      if (s.n % 2 != 0) fail("matching needs an even order");
      return classic::matching(s.n / 2);
    }
    if (s.name == "biclique") return classic::complete_bipartite(s.a, s.b);
  } catch (const GraphError& e) {
    fail(e.what());
  }
  fail("unknown classic graph '" + s.name + "'");
}

}  // namespace

std::string_view family_key(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Lambda: return "lambda";
    case FamilyTag::Phi: return "phi";
    case FamilyTag::Psi: return "psi";
    case FamilyTag::Omega: return "omega";
    case FamilyTag::GCal: return "gcal";
    case FamilyTag::Theta: return "theta";
    case FamilyTag::HFamily: return "h";
    case FamilyTag::Grid: return "grid";
    case FamilyTag::Classic: return "classic";
  }
  return "?";
}

std::optional<FamilyTag> parse_family_key(std::string_view key) {
  for (FamilyTag t : {FamilyTag::Lambda, FamilyTag::Phi, FamilyTag::Psi, FamilyTag::Omega, FamilyTag::GCal,
                      FamilyTag::Theta, FamilyTag::HFamily, FamilyTag::Grid, FamilyTag::Classic}) {
    if (family_key(t) == key) return t;
  }
  return std::nullopt;
}

FamilyTag family_tag(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const LambdaSpec&) { return FamilyTag::Lambda; },
                        [](const PhiSpec&) { return FamilyTag::Phi; },
                        [](const PsiSpec&) { return FamilyTag::Psi; },
                        [](const OmegaSpec&) { return FamilyTag::Omega; },
                        [](const GCalSpec&) { return FamilyTag::GCal; },
                        [](const ThetaSpec&) { return FamilyTag::Theta; },
                        [](const HSpec&) { return FamilyTag::HFamily; },
                        [](const GridSpec&) { return FamilyTag::Grid; },
                        [](const ClassicSpec&) { return FamilyTag::Classic; },
                    },
                    spec);
}

Graph generate(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const LambdaSpec& s) { return generate_lambda(s); },
                        [](const PhiSpec& s) { return generate_phi(s); },
                        [](const PsiSpec& s) { return generate_psi(s); },
                        [](const OmegaSpec& s) { return generate_omega(s); },
                        [](const GCalSpec& s) { return generate_gcal(s); },
                        [](const ThetaSpec& s) { return generate_theta(s); },
                        [](const HSpec& s) { return generate_h(s); },
                        [](const GridSpec& s) { return generate_grid(s); },
                        [](const ClassicSpec& s) { return generate_classic(s); },
                    },
                    spec);
}

// ---------------------------------------------------------------------------
// Frozen example graphs.

std::string_view fixture_key(Fixture f) {
  switch (f) {
    case Fixture::H1: return "H1";
    case Fixture::H2: return "H2";
    case Fixture::PsiFig1: return "PSI_FIG1";
    case Fixture::OmegaFig3: return "OMEGA_FIG3";
  }
  return "?";
}

std::optional<Fixture> parse_fixture_key(std::string_view key) {
  for (Fixture f : kAllFixtures) {
    if (fixture_key(f) == key) return f;
  }
  return std::nullopt;
}

Graph fixture(Fixture f) {
  switch (f) {
    case Fixture::H1: {
      // Blocks x1..x4 = 0..3, y1..y4 = 4..7, z1..z4 = 8..11, each K4 minus
      // the edge between its 2nd and 4th vertex.
      GraphBuilder b(12);
      for (int base : {0, 4, 8}) {
        b.add_edge(base + 0, base + 1).add_edge(base + 1, base + 2).add_edge(base + 2, base + 3);
        b.add_edge(base + 3, base + 0).add_edge(base + 0, base + 2);
      }
      b.add_edge(3, 11);  // x4 z4
      b.add_edge(9, 7);   // z2 y4
      b.add_edge(1, 5);   // x2 y2
      return b.build();
    }
    case Fixture::H2: {
      // u1..u6 = 0..5, v1..v4 = 6..9.
      constexpr int u1 = 0, u2 = 1, u3 = 2, u4 = 3, u5 = 4, u6 = 5;
      constexpr int v1 = 6, v2 = 7, v3 = 8, v4 = 9;
      return Graph::from_edge_list(10, {{v1, u1}, {u1, u2}, {u2, v1}, {v1, u4}, {u4, v4}, {v4, u6}, {u6, v3},
                                        {v3, u5}, {u5, v2}, {v2, u2}, {u1, v2}, {v3, u3}, {u3, v4}, {u6, u5},
                                        {u3, u4}});
    }
    case Fixture::PsiFig1: {
      // x = 0 (the apex), y1..y3 = 1..3, x1..x6 = 4..9.
      PsiSpec s;
      s.n = 10;
      s.cross_edges = std::vector<Edge>{{1, 4}, {2, 4}, {1, 5}, {2, 5}, {1, 6}, {3, 6},
                                        {1, 7}, {3, 7}, {2, 8}, {3, 8}, {2, 9}, {3, 9}};
      return generate(s);
    }
    case Fixture::OmegaFig3: {
      // (a, b, p, r, k3, k4) = (2, 2, 4, 3, 0, 3). v1 v1' v2 v2' v3 v3' v4 v4'
      // = 0..7, u1..u4 = 8..11, w1..w3 = 12..14.
      OmegaSpec s;
      s.a = 2;
      s.b = 2;
      s.p = 4;
      s.r = 3;
      s.extra_leaves = {0, 3};
      s.attachments = std::vector<std::vector<int>>{{0, 2, 3}, {0, 1, 6}, {1, 4, 6}, {1, 2, 3}};
      return generate(s);
    }
  }
  fail("unknown fixture");
}

Graph fixture(std::string_view name) {
  if (auto f = parse_fixture_key(name)) return fixture(*f);
  fail("unknown fixture '" + std::string(name) + "' (expected H1, H2, PSI_FIG1 or OMEGA_FIG3)");
}

}  // namespace oidom
