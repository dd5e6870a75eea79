#include <functional>
#include <initializer_list>
#include <string>

#include "oidom/families.hpp"
#include "oidom/graph6.hpp"
#include "oidom/isomorphism.hpp"
#include "oidom/reductions.hpp"
#include "oidom/theorems.hpp"

namespace oidom {

const std::array<TheoremId, kTheoremCount> kAllTheorems = {
    TheoremId::L1_SUM_BOUNDS,        TheoremId::L2_TOID_N_MINUS_1,  TheoremId::T3_PRODUCT_TOID,
    TheoremId::T4_SUM_EQ_PHI,        TheoremId::T5_PRODUCT_2OID,    TheoremId::DOID_SUM_2N,
    TheoremId::DOID_SUM_2N_MINUS_1,  TheoremId::DOID_PRODUCT_LOWER, TheoremId::T_DELTA_UPPER,
    TheoremId::E8_IDENTITY,          TheoremId::CLAWFREE_LOWER,     TheoremId::CLAWFREE_EQUALITY,
    TheoremId::CUBIC_CLAWFREE_SANDWICH, TheoremId::TRIANGLEFREE_ALPHA, TheoremId::TRIANGLEFREE_UPPER,
    TheoremId::DELTASTAR_LOWER,      TheoremId::TREE_COROLLARY,     TheoremId::P1_LOWER_AND_GCAL,
    TheoremId::BIPARTITE_UPPER,      TheoremId::NP_IDENTITY,
};

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view key;
  EqualityKind kind;
  std::string_view statement;
};

constexpr TheoremInfo kInfo[] = {
    {TheoremId::L1_SUM_BOUNDS, "L1_SUM_BOUNDS", EqualityKind::Characterization,
     "G, co-G isolate-free: n-1 <= toid + toid(co-G) <= 2n-1; upper equality iff G is C4 or 2P2"},
    {TheoremId::L2_TOID_N_MINUS_1, "L2_TOID_N_MINUS_1", EqualityKind::Characterization,
     "G connected, n >= 2: toid = n-1 iff G is P3, C4, C5 or complete with n >= 3"},
    {TheoremId::T3_PRODUCT_TOID, "T3_PRODUCT_TOID", EqualityKind::Characterization,
     "n >= 5, G, co-G isolate-free: 2n-6 <= toid * toid(co-G) <= (n-1)^2; lower equality iff G or co-G in Lambda, "
     "upper iff G is C5"},
    {TheoremId::T4_SUM_EQ_PHI, "T4_SUM_EQ_PHI", EqualityKind::Characterization,
     "G, co-G isolate-free: toid + toid(co-G) = n-1 iff G in Phi"},
    {TheoremId::T5_PRODUCT_2OID, "T5_PRODUCT_2OID", EqualityKind::Characterization,
     "n >= 4: 3n-12 <= 2oid * 2oid(co-G) <= n(n-1); lower equality iff G or co-G in Psi, upper iff G is K_n or "
     "its complement"},
    {TheoremId::DOID_SUM_2N, "DOID_SUM_2N", EqualityKind::Characterization,
     "G, co-G isolate-free: doid + doid(co-G) <= 2n, equality iff G is P4"},
    {TheoremId::DOID_SUM_2N_MINUS_1, "DOID_SUM_2N_MINUS_1", EqualityKind::Characterization,
     "G, co-G isolate-free, G not P4: doid + doid(co-G) <= 2n-1, equality iff G or co-G in Theta"},
    {TheoremId::DOID_PRODUCT_LOWER, "DOID_PRODUCT_LOWER", EqualityKind::Characterization,
     "G, co-G isolate-free: doid * doid(co-G) >= 3n-12, equality iff G or co-G in Psi"},
    {TheoremId::T_DELTA_UPPER, "T_DELTA_UPPER", EqualityKind::Sharpness,
     "min degree >= 2, G neither complete nor an odd cycle: 2oid <= (Delta-1)n/Delta; sharp on the H family"},
    {TheoremId::E8_IDENTITY, "E8_IDENTITY", EqualityKind::None, "min degree >= 2: 2oid = n - alpha"},
    {TheoremId::CLAWFREE_LOWER, "CLAWFREE_LOWER", EqualityKind::None,
     "claw-free: toid, 2oid, doid >= delta n / (delta + 2) (toid, doid when defined)"},
    {TheoremId::CLAWFREE_EQUALITY, "CLAWFREE_EQUALITY", EqualityKind::None,
     "claw-free, min degree >= 3: toid = 2oid = doid"},
    {TheoremId::CUBIC_CLAWFREE_SANDWICH, "CUBIC_CLAWFREE_SANDWICH", EqualityKind::Sharpness,
     "claw-free cubic, not K4: 3n/5 <= toid = 2oid = doid <= 2n/3; upper sharp on H1, lower on H2"},
    {TheoremId::TRIANGLEFREE_ALPHA, "TRIANGLEFREE_ALPHA", EqualityKind::None,
     "triangle-free: alpha >= 2n / (3 + Delta)"},
    {TheoremId::TRIANGLEFREE_UPPER, "TRIANGLEFREE_UPPER", EqualityKind::None,
     "triangle-free, min degree >= 2: 2oid <= (Delta + 1) n / (Delta + 3)"},
    {TheoremId::DELTASTAR_LOWER, "DELTASTAR_LOWER", EqualityKind::Characterization,
     "isolate-free: doid >= (2 d* n - 2m + l - s) / (2 d* - 1), equality iff G in Omega"},
    {TheoremId::TREE_COROLLARY, "TREE_COROLLARY", EqualityKind::None,
     "tree, n >= 2: doid >= (2n + l - s + 2) / 3"},
    {TheoremId::P1_LOWER_AND_GCAL, "P1_LOWER_AND_GCAL", EqualityKind::Characterization,
     "2oid >= n - m/2, equality iff G in the P-Q family"},
    {TheoremId::BIPARTITE_UPPER, "BIPARTITE_UPPER", EqualityKind::Sharpness,
     "bipartite, min degree >= 2: toid = doid <= (n + gamma_t)/2; sharp on P_3k x P_2"},
    {TheoremId::NP_IDENTITY, "NP_IDENTITY", EqualityKind::None,
     "min degree >= 1: 2oid and doid of the gadget graphs equal 3n - alpha"},
};

const TheoremInfo& info(TheoremId id) { return kInfo[static_cast<int>(id)]; }

// Exact structural tests for the named small graphs.
bool is_cycle_graph(const Graph& g) { return g.order() >= 3 && is_regular(g, 2) && is_connected(g); }
bool is_path_graph(const Graph& g, int n) {
  return g.order() == n && is_tree(g) && degree_profile(g).max_degree <= 2;
}
bool is_c4(const Graph& g) { return g.order() == 4 && is_cycle_graph(g); }
bool is_c5(const Graph& g) { return g.order() == 5 && is_cycle_graph(g); }
bool is_2p2(const Graph& g) { return g.order() == 4 && is_regular(g, 1); }
bool is_odd_cycle(const Graph& g) { return g.order() % 2 == 1 && is_cycle_graph(g); }

struct BoundCheck {
  const char* bound;
  bool equal;
  std::function<bool()> recognize;
};

void settle(TheoremOutcome& out, EqualityKind kind, std::initializer_list<BoundCheck> checks) {
  if (kind == EqualityKind::Characterization) {
    for (const BoundCheck& c : checks) {
      const bool rec = c.recognize();
      if (c.equal != rec) {
        out.outcome = Outcome::Fail;
        out.bound = c.bound;
        out.recognized = rec;
        out.reason = c.equal ? std::string(c.bound) + " bound attained by a graph outside the family"
                             : std::string("family member misses the ") + c.bound + " bound";
        return;
      }
    }
  }
  for (const BoundCheck& c : checks) {
    if (c.equal) {
      out.outcome = Outcome::EqualityCase;
      out.bound = c.bound;
      out.recognized = c.recognize();
      return;
    }
  }
  out.outcome = Outcome::Pass;
}

TheoremOutcome fail(TheoremOutcome out, std::string reason) {
  out.outcome = Outcome::Fail;
  out.reason = std::move(reason);
  return out;
}

TheoremOutcome evaluate(TheoremId id, GraphFacts& f, const CheckOptions& options) {
  const Graph& g = f.graph();
  const int n = f.order();
  const int m = f.size();
  const DegreeProfile& prof = f.profile();
  const EqualityKind kind = info(id).kind;
  TheoremOutcome out;
  auto skip = [] { return TheoremOutcome{}; };
  auto add = [&out](const char* name, int v) { out.values.emplace_back(name, v); };
  const bool both_isolate_free = n >= 1 && f.isolate_free() && f.complement_isolate_free();

  switch (id) {
    case TheoremId::L1_SUM_BOUNDS: {
      if (!both_isolate_free) return skip();
      const int t = f.defined_value(ParamKind::Toid), tb = f.defined_value(ParamKind::Toid, true);
      add("n", n), add("toid", t), add("toid_bar", tb), add("sum", t + tb);
      if (t + tb < n - 1 || t + tb > 2 * n - 1) return fail(out, "sum outside [n-1, 2n-1]");
      settle(out, kind, {{"upper", t + tb == 2 * n - 1, [&] { return is_c4(g) || is_2p2(g); }}});
      return out;
    }
    case TheoremId::L2_TOID_N_MINUS_1: {
      if (n < 2 || !is_connected(g)) return skip();
      const int t = f.defined_value(ParamKind::Toid);
      add("n", n), add("toid", t);
      settle(out, kind, {{"identity", t == n - 1, [&] {
                            return is_path_graph(g, 3) || is_c4(g) || is_c5(g) || (n >= 3 && is_complete(g));
                          }}});
      return out;
    }
    case TheoremId::T3_PRODUCT_TOID: {
      if (n < 5 || !both_isolate_free) return skip();
      const int t = f.defined_value(ParamKind::Toid), tb = f.defined_value(ParamKind::Toid, true);
      add("n", n), add("toid", t), add("toid_bar", tb), add("product", t * tb);
      if (t * tb < 2 * n - 6 || t * tb > (n - 1) * (n - 1)) return fail(out, "product outside [2n-6, (n-1)^2]");
      settle(out, kind,
             {{"lower", t * tb == 2 * n - 6, [&] { return in_lambda(g) || in_lambda(f.complement()); }},
              {"upper", t * tb == (n - 1) * (n - 1), [&] { return is_c5(g); }}});
      return out;
    }
    case TheoremId::T4_SUM_EQ_PHI: {
      if (!both_isolate_free) return skip();
      const int t = f.defined_value(ParamKind::Toid), tb = f.defined_value(ParamKind::Toid, true);
      add("n", n), add("toid", t), add("toid_bar", tb), add("sum", t + tb);
      settle(out, kind, {{"lower", t + tb == n - 1, [&] { return in_phi(g); }}});
      return out;
    }
    case TheoremId::T5_PRODUCT_2OID: {
      if (n < 4) return skip();
      const int a = f.defined_value(ParamKind::TwoOid), ab = f.defined_value(ParamKind::TwoOid, true);
      add("n", n), add("2oid", a), add("2oid_bar", ab), add("product", a * ab);
      if (a * ab < 3 * n - 12 || a * ab > n * (n - 1)) return fail(out, "product outside [3n-12, n(n-1)]");
      settle(out, kind,
             {{"lower", a * ab == 3 * n - 12, [&] { return in_psi(g) || in_psi(f.complement()); }},
              {"upper", a * ab == n * (n - 1), [&] { return is_complete(g) || m == 0; }}});
      return out;
    }
    case TheoremId::DOID_SUM_2N: {
      if (!both_isolate_free) return skip();
      const int d = f.defined_value(ParamKind::Doid), db = f.defined_value(ParamKind::Doid, true);
      add("n", n), add("doid", d), add("doid_bar", db), add("sum", d + db);
      if (d + db > 2 * n) return fail(out, "sum above 2n");
      settle(out, kind, {{"upper", d + db == 2 * n, [&] { return is_path_graph(g, 4); }}});
      return out;
    }
    case TheoremId::DOID_SUM_2N_MINUS_1: {
      if (!both_isolate_free || is_path_graph(g, 4)) return skip();
      const int d = f.defined_value(ParamKind::Doid), db = f.defined_value(ParamKind::Doid, true);
      add("n", n), add("doid", d), add("doid_bar", db), add("sum", d + db);
      if (d + db > 2 * n - 1) return fail(out, "sum above 2n-1");
      settle(out, kind,
             {{"upper", d + db == 2 * n - 1, [&] { return in_theta(g) || in_theta(f.complement()); }}});
      return out;
    }
    case TheoremId::DOID_PRODUCT_LOWER: {
      if (!both_isolate_free) return skip();
      const int d = f.defined_value(ParamKind::Doid), db = f.defined_value(ParamKind::Doid, true);
      add("n", n), add("doid", d), add("doid_bar", db), add("product", d * db);
      if (d * db < 3 * n - 12) return fail(out, "product below 3n-12");
      settle(out, kind, {{"lower", d * db == 3 * n - 12, [&] { return in_psi(g) || in_psi(f.complement()); }}});
      return out;
    }
    case TheoremId::T_DELTA_UPPER: {
      if (n == 0 || prof.min_degree < 2 || is_complete(g) || is_odd_cycle(g)) return skip();
      const int a = f.defined_value(ParamKind::TwoOid);
      const int delta = prof.max_degree;
      add("n", n), add("Delta", delta), add("2oid", a);
      if (a * delta > (delta - 1) * n) return fail(out, "2oid above (Delta-1)n/Delta");
      settle(out, kind, {{"upper", a * delta == (delta - 1) * n, [&] { return in_h_family(g); }}});
      return out;
    }
    case TheoremId::E8_IDENTITY: {
      if (n == 0 || prof.min_degree < 2) return skip();
      const int a = f.defined_value(ParamKind::TwoOid), alpha = f.defined_value(ParamKind::Alpha);
      add("n", n), add("2oid", a), add("alpha", alpha);
      if (a != n - alpha) return fail(out, "2oid differs from n - alpha");
      out.outcome = Outcome::Pass;
      return out;
    }
    case TheoremId::CLAWFREE_LOWER: {
      if (n == 0 || !is_claw_free(g)) return skip();
      const int delta = prof.min_degree;
      add("n", n), add("delta", delta);
      for (ParamKind k : {ParamKind::Toid, ParamKind::TwoOid, ParamKind::Doid}) {
        const auto v = f.value(k);
        if (!v) continue;
        out.values.emplace_back(std::string(param_key(k)), *v);
        if (*v * (delta + 2) < delta * n) return fail(out, std::string(param_key(k)) + " below delta n/(delta+2)");
      }
      out.outcome = Outcome::Pass;
      return out;
    }
    case TheoremId::CLAWFREE_EQUALITY: {
      if (n == 0 || prof.min_degree < 3 || !is_claw_free(g)) return skip();
      const int t = f.defined_value(ParamKind::Toid), a = f.defined_value(ParamKind::TwoOid),
                d = f.defined_value(ParamKind::Doid);
      add("toid", t), add("2oid", a), add("doid", d);
      if (t != a || a != d) return fail(out, "parameters differ");
      out.outcome = Outcome::Pass;
      return out;
    }
    case TheoremId::CUBIC_CLAWFREE_SANDWICH: {
      if (n == 0 || !is_regular(g, 3) || !is_claw_free(g) || is_complete(g)) return skip();
      const int t = f.defined_value(ParamKind::Toid), a = f.defined_value(ParamKind::TwoOid),
                d = f.defined_value(ParamKind::Doid);
      add("n", n), add("toid", t), add("2oid", a), add("doid", d);
      if (t != a || a != d) return fail(out, "parameters differ");
      if (3 * n > 5 * a) return fail(out, "below 3n/5");
      if (3 * a > 2 * n) return fail(out, "above 2n/3");
      settle(out, kind,
             {{"upper", 3 * a == 2 * n, [&] { return n == 12 && are_isomorphic(g, fixture(Fixture::H1), 12); }},
              {"lower", 5 * a == 3 * n, [&] { return n == 10 && are_isomorphic(g, fixture(Fixture::H2), 10); }}});
      return out;
    }
    case TheoremId::TRIANGLEFREE_ALPHA: {
      if (n == 0 || !is_triangle_free(g)) return skip();
      const int alpha = f.defined_value(ParamKind::Alpha);
      add("n", n), add("Delta", prof.max_degree), add("alpha", alpha);
      if (alpha * (3 + prof.max_degree) < 2 * n) return fail(out, "alpha below 2n/(3+Delta)");
      out.outcome = Outcome::Pass;
      return out;
    }
    case TheoremId::TRIANGLEFREE_UPPER: {
      if (n == 0 || prof.min_degree < 2 || !is_triangle_free(g)) return skip();
      const int a = f.defined_value(ParamKind::TwoOid);
      add("n", n), add("Delta", prof.max_degree), add("2oid", a);
      if (a * (prof.max_degree + 3) > (prof.max_degree + 1) * n) return fail(out, "2oid above (Delta+1)n/(Delta+3)");
      out.outcome = Outcome::Pass;
      return out;
    }
    case TheoremId::DELTASTAR_LOWER: {
      if (n == 0 || !f.isolate_free() || n > kOmegaOrderCap) return skip();
      const int d = f.defined_value(ParamKind::Doid);
      const int ds = prof.delta_star, l = prof.leaves.size(), s = prof.supports.size();
      const int lhs = d * (2 * ds - 1), rhs = 2 * ds * n - 2 * m + l - s;
      add("n", n), add("m", m), add("leaves", l), add("supports", s), add("delta_star", ds), add("doid", d);
      if (lhs < rhs) return fail(out, "doid below the delta* bound");
      settle(out, kind, {{"lower", lhs == rhs, [&] { return in_omega(g); }}});
      return out;
    }
    case TheoremId::TREE_COROLLARY: {
      if (n < 2 || !is_tree(g)) return skip();
      const int d = f.defined_value(ParamKind::Doid);
      const int l = prof.leaves.size(), s = prof.supports.size();
      add("n", n), add("leaves", l), add("supports", s), add("doid", d);
      if (3 * d < 2 * n + l - s + 2) return fail(out, "doid below (2n+l-s+2)/3");
      out.outcome = Outcome::Pass;
      return out;
    }
    case TheoremId::P1_LOWER_AND_GCAL: {
      const int a = f.defined_value(ParamKind::TwoOid);
      add("n", n), add("m", m), add("2oid", a);
      if (2 * a < 2 * n - m) return fail(out, "2oid below n - m/2");
      settle(out, kind, {{"lower", 2 * a == 2 * n - m, [&] { return in_gcal(g); }}});
      return out;
    }
    case TheoremId::BIPARTITE_UPPER: {
      if (n == 0 || prof.min_degree < 2 || !is_bipartite(g)) return skip();
      const int t = f.defined_value(ParamKind::Toid), d = f.defined_value(ParamKind::Doid),
                gt = f.defined_value(ParamKind::GammaT);
      add("n", n), add("toid", t), add("doid", d), add("gamma_t", gt);
      if (t != d) return fail(out, "toid differs from doid");
      if (2 * t > n + gt) return fail(out, "toid above (n + gamma_t)/2");
      settle(out, kind, {{"upper", 2 * t == n + gt, [&] { return in_grid(g); }}});
      return out;
    }
    case TheoremId::NP_IDENTITY: {
      if (n == 0 || !f.isolate_free() || n > options.np_max_order || 6 * n > Graph::kMaxOrder) return skip();
      const int alpha = f.defined_value(ParamKind::Alpha);
      const int two = solve(reduce(g, ReductionKind::TwoOidGadget), ParamKind::TwoOid).value.value();
      const int dbl = solve(reduce(g, ReductionKind::DoidGadget), ParamKind::Doid).value.value();
      add("n", n), add("alpha", alpha), add("2oid_gadget", two), add("doid_gadget", dbl);
      if (two != 3 * n - alpha) return fail(out, "2oid gadget value differs from 3n - alpha");
      if (dbl != 3 * n - alpha) return fail(out, "doid gadget value differs from 3n - alpha");
      out.outcome = Outcome::Pass;
      return out;
    }
  }
  return out;
}

}  // namespace

std::string_view theorem_key(TheoremId id) { return info(id).key; }

std::optional<TheoremId> parse_theorem_key(std::string_view key) {
  for (const TheoremInfo& t : kInfo) {
    if (t.key == key) return t.id;
  }
  return std::nullopt;
}

std::string_view theorem_statement(TheoremId id) { return info(id).statement; }

EqualityKind equality_kind(TheoremId id) { return info(id).kind; }

std::string_view equality_kind_key(EqualityKind kind) {
  switch (kind) {
    case EqualityKind::None: return "none";
    case EqualityKind::Characterization: return "characterization";
    case EqualityKind::Sharpness: return "sharpness";
  }
  return "?";
}

std::string_view outcome_key(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "APPLICABLE_PASS";
    case Outcome::Fail: return "APPLICABLE_FAIL";
    case Outcome::EqualityCase: return "EQUALITY_CASE";
    case Outcome::Skipped: return "SKIPPED";
  }
  return "?";
}

GraphFacts::GraphFacts(const Graph& g) : g_(g), profile_(degree_profile(g)) {}

const Graph& GraphFacts::complement() {
  if (!complement_) complement_ = g_.complement();
  return *complement_;
}

std::optional<int> GraphFacts::value(ParamKind kind, bool of_complement) {
  auto& slot = values_[of_complement ? 1 : 0][static_cast<int>(kind)];
  if (!slot) slot = solve(of_complement ? complement() : g_, kind).value;
  return *slot;
}

int GraphFacts::defined_value(ParamKind kind, bool of_complement) {
  const auto v = value(kind, of_complement);
  if (!v) {
    throw ConsistencyError(std::string(param_symbol(kind)) + " undefined on " + (of_complement ? "the complement of " : "") +
                           g6() + " although the filter accepted it");
  }
  return *v;
}

const std::string& GraphFacts::g6() {
  if (!g6_) g6_ = to_graph6(g_);
  return *g6_;
}

TheoremOutcome check_theorem(TheoremId id, GraphFacts& facts, const CheckOptions& options) {
  return evaluate(id, facts, options);
}

TheoremOutcome check_theorem(TheoremId id, const Graph& g, const CheckOptions& options) {
  GraphFacts facts(g);
  return evaluate(id, facts, options);
}

}  // namespace oidom
