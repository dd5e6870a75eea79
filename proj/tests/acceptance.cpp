// Acceptance run: one PASS/FAIL line per criterion, with details on
// following indented lines. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oidom/classic.hpp"
#include "oidom/enumerate.hpp"
#include "oidom/families.hpp"
#include "oidom/graph6.hpp"
#include "oidom/reductions.hpp"
#include "oidom/solvers.hpp"
#include "oidom/sweep.hpp"
#include "oidom/theorems.hpp"

using namespace oidom;

namespace {

// Time limits in seconds.
constexpr double kCycleLimit = 1.0;
constexpr double kOracleLimit = 120.0;
constexpr double kSweepLimit = 900.0;
constexpr double kReductionLimit = 600.0;

constexpr int kSweepJobs = 8;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail << "    " << what << "\n";
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", number, title.c_str(), secs);
  std::cout << v.detail.str() << std::flush;
  if (!v.pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int value_of(const Graph& g, ParamKind kind) { return solve(g, kind).value.value(); }

std::string sweep_report_text;

}  // namespace

int main() {
  criterion(1, "cycle formulas for n = 3..12", [](Verdict& v) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 3; n <= 12; ++n) {
      const Graph c = classic::cycle(n);
      const int toid = value_of(c, ParamKind::Toid);
      const int two = value_of(c, ParamKind::TwoOid);
      v.expect(toid == (2 * n + 2) / 3, "C" + std::to_string(n) + " toid = " + std::to_string(toid));
      v.expect(two == (n + 1) / 2, "C" + std::to_string(n) + " 2oid = " + std::to_string(two));
    }
    const double secs = seconds_since(start);
    v.expect(secs < kCycleLimit, "took " + std::to_string(secs) + " s");
  });

  criterion(2, "star values for n = 4..8", [](Verdict& v) {
    for (int n = 4; n <= 8; ++n) {
      const Graph s = classic::star(n);
      v.expect(value_of(s, ParamKind::Toid) == 2, "K_{1," + std::to_string(n - 1) + "} toid");
      v.expect(value_of(s, ParamKind::TwoOid) == n - 1, "K_{1," + std::to_string(n - 1) + "} 2oid");
    }
  });

  criterion(3, "solve matches the subset scan on all labeled graphs with n <= 6", [](Verdict& v) {
    const auto start = std::chrono::steady_clock::now();
    const ParamKind kinds[] = {ParamKind::Toid, ParamKind::TwoOid, ParamKind::Doid, ParamKind::Alpha};
    std::uint64_t graphs = 0;
    std::uint64_t mismatches = 0;
    for (int n = 1; n <= 6; ++n) {
      for_each_labeled(n, [&](const Graph& g) {
        ++graphs;
        for (ParamKind k : kinds) {
          if (solve(g, k) == solve_naive(g, k)) continue;
          if (++mismatches <= 5) v.expect(false, to_graph6(g) + " " + std::string(param_key(k)));
        }
      });
    }
    v.detail << "    graphs = " << graphs << ", mismatches = " << mismatches << "\n";
    v.expect(mismatches == 0, "mismatches found");
    const double secs = seconds_since(start);
    v.expect(secs < kOracleLimit, "took " + std::to_string(secs) + " s");
  });

  criterion(4, "zero violations over all labeled graphs of orders 4..7", [](Verdict& v) {
    SweepOptions opt;
    opt.n_min = 4;
    opt.n_max = 7;
    opt.jobs = kSweepJobs;
    const auto start = std::chrono::steady_clock::now();
    const SweepReport report = sweep(opt);
    const double secs = seconds_since(start);
    sweep_report_text = report_json_text(report);
    v.detail << "    graphs = " << report.graphs << "\n";
    for (const TheoremTally& t : report.theorems) {
      if (t.violations_total == 0) continue;
      std::ostringstream line;
      line << theorem_key(t.id) << ": " << t.violations_total << " violations";
      if (!t.violations.empty()) {
        line << ", first " << t.violations.front().g6 << " (" << t.violations.front().reason << ")";
      }
      v.expect(false, line.str());
    }
    v.expect(report.passed(), "sweep reported violations");
    v.expect(secs < kSweepLimit, "took " + std::to_string(secs) + " s");
  });

  criterion(5, "fixture values", [](Verdict& v) {
    const Graph h1 = fixture(Fixture::H1);
    const Graph h2 = fixture(Fixture::H2);
    v.expect(h1.order() == 12 && value_of(h1, ParamKind::TwoOid) == 8, "H1 2oid != 8");
    v.expect(h2.order() == 10 && value_of(h2, ParamKind::TwoOid) == 6, "H2 2oid != 6");
    v.expect(3 * value_of(h1, ParamKind::TwoOid) == 2 * h1.order(), "H1 not at 2n/3");
    v.expect(5 * value_of(h2, ParamKind::TwoOid) == 3 * h2.order(), "H2 not at 3n/5");
    for (const Graph& g : {h1, h2}) {
      v.expect(is_regular(g, 3), "fixture not 3-regular");
      v.expect(is_claw_free(g), "fixture not claw-free");
    }
    const Graph psi = fixture(Fixture::PsiFig1);
    const int product = value_of(psi, ParamKind::TwoOid) * value_of(psi.complement(), ParamKind::TwoOid);
    v.expect(product == 18, "psi fixture product = " + std::to_string(product));
    const Graph omega = fixture(Fixture::OmegaFig3);
    const DegreeProfile p = degree_profile(omega);
    const int doid = value_of(omega, ParamKind::Doid);
    const int numerator = 2 * p.delta_star * omega.order() - 2 * omega.size() + p.leaves.size() - p.supports.size();
    v.expect(doid == 11, "omega fixture doid = " + std::to_string(doid));
    v.expect(doid * (2 * p.delta_star - 1) == numerator, "omega fixture misses the delta* bound");
  });

  criterion(6, "gadget identities on connected labeled graphs with 2 <= n <= 5", [](Verdict& v) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t graphs = 0;
    std::uint64_t failed = 0;
    for (int n = 2; n <= 5; ++n) {
      for_each_labeled(n, [&](const Graph& g) {
        if (!is_connected(g)) return;
        ++graphs;
        for (ReductionKind kind : {ReductionKind::TwoOidGadget, ReductionKind::DoidGadget}) {
          if (verify_reduction(g, kind).identity_holds()) continue;
          if (++failed <= 5) v.expect(false, to_graph6(g) + " " + std::string(reduction_key(kind)));
        }
      });
    }
    v.detail << "    graphs = " << graphs << ", failures = " << failed << "\n";
    v.expect(failed == 0, "identity failures");
    const double secs = seconds_since(start);
    v.expect(secs < kReductionLimit, "took " + std::to_string(secs) + " s");
  });

  criterion(7, "grid values for k = 1..3", [](Verdict& v) {
    for (int k = 1; k <= 3; ++k) {
      const Graph g = generate(GridSpec{k});
      const int two = value_of(g, ParamKind::TwoOid);
      const int doid = value_of(g, ParamKind::Doid);
      v.expect(two == 4 * k, "k=" + std::to_string(k) + " 2oid = " + std::to_string(two) + ", expected " +
                                 std::to_string(4 * k) + " (doid = " + std::to_string(doid) + ")");
      v.expect(value_of(g, ParamKind::GammaT) == 2 * k, "k=" + std::to_string(k) + " gamma_t");
    }
  });

  criterion(8, "toid product census at n = 4", [](Verdict& v) {
    ProductCensus census;
    for_each_labeled(4, [&](const Graph& g) {
      GraphFacts facts(g);
      census.record(facts);
    });
    for (const auto& [product, count] : census.products) {
      v.detail << "    product " << product << ": " << count << "\n";
      v.expect(product == 4 || product == 12, "unexpected product " + std::to_string(product));
    }
    v.expect(census.products.count(12) == 1, "product 12 never occurs");
    v.expect(census.mismatches == 0, "product 12 off the C4 / 2P2 pairs");
    v.expect(census.holds(), "census does not hold");
  });

  criterion(9, "sweep report identical for jobs 1 and 8", [](Verdict& v) {
    SweepOptions opt;
    opt.n_min = 4;
    opt.n_max = 7;
    opt.jobs = 1;
    const std::string single = report_json_text(sweep(opt));
    v.expect(!sweep_report_text.empty(), "criterion 4 produced no report");
    v.expect(single == sweep_report_text, "reports differ");
    v.detail << "    report bytes = " << single.size() << "\n";
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
