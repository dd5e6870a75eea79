#pragma once

/// \file theorems.hpp
/// Registry of the checked bounds and characterizations. Each theorem has an
/// applicability filter, an evaluator and, where equality is characterized or
/// shown sharp, a recognizer for the equality graphs.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oidom/graph.hpp"
#include "oidom/solvers.hpp"

namespace oidom {

enum class TheoremId {
  L1_SUM_BOUNDS,
  L2_TOID_N_MINUS_1,
  T3_PRODUCT_TOID,
  T4_SUM_EQ_PHI,
  T5_PRODUCT_2OID,
  DOID_SUM_2N,
  DOID_SUM_2N_MINUS_1,
  DOID_PRODUCT_LOWER,
  T_DELTA_UPPER,
  E8_IDENTITY,
  CLAWFREE_LOWER,
  CLAWFREE_EQUALITY,
  CUBIC_CLAWFREE_SANDWICH,
  TRIANGLEFREE_ALPHA,
  TRIANGLEFREE_UPPER,
  DELTASTAR_LOWER,
  TREE_COROLLARY,
  P1_LOWER_AND_GCAL,
  BIPARTITE_UPPER,
  NP_IDENTITY,
};

inline constexpr int kTheoremCount = 20;
extern const std::array<TheoremId, kTheoremCount> kAllTheorems;

std::string_view theorem_key(TheoremId id);
std::optional<TheoremId> parse_theorem_key(std::string_view key);
/// One-line statement of what is checked.
std::string_view theorem_statement(TheoremId id);

/// Characterization: equality must coincide with family membership.
/// Sharpness: equality cases are inventoried against a witness family but
/// never counted as violations.
enum class EqualityKind { None, Characterization, Sharpness };

EqualityKind equality_kind(TheoremId id);
std::string_view equality_kind_key(EqualityKind kind);

/// Per-graph cache of the complement, parameter values and degree data,
/// shared by all theorem evaluations on one graph. Not thread-safe.
class GraphFacts {
 public:
  explicit GraphFacts(const Graph& g);

  const Graph& graph() const { return g_; }
  const Graph& complement();
  int order() const { return g_.order(); }
  int size() const { return g_.size(); }
  const DegreeProfile& profile() { return profile_; }
  bool isolate_free() const { return profile_.min_degree >= 1 || g_.order() == 0; }
  bool complement_isolate_free() const { return profile_.max_degree <= g_.order() - 2 || g_.order() == 0; }

  /// Parameter of G (or of its complement). Empty optional = undefined.
  std::optional<int> value(ParamKind kind, bool of_complement = false);
  /// value() that must be defined; throws ConsistencyError otherwise.
  int defined_value(ParamKind kind, bool of_complement = false);

  const std::string& g6();

 private:
  Graph g_;
  std::optional<Graph> complement_;
  DegreeProfile profile_;
  std::array<std::array<std::optional<std::optional<int>>, 7>, 2> values_{};
  std::optional<std::string> g6_;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Outcome { Pass, Fail, EqualityCase, Skipped };

std::string_view outcome_key(Outcome outcome);

struct TheoremOutcome {
  Outcome outcome = Outcome::Skipped;
  /// Which bound was met ("lower", "upper", "identity") for equality cases.
  std::string bound;
  /// Named quantities behind the verdict, in a fixed order.
  std::vector<std::pair<std::string, int>> values;
  /// Family verdict for equality cases (and for characterization failures).
  std::optional<bool> recognized;
  /// Reason for a Fail.
  std::string reason;
};

struct CheckOptions {
  /// The gadget identity is solved only up to this input order (gadgets
  /// have six times as many vertices, so 10 is the vertex-cap limit).
  int np_max_order = 10;
};

TheoremOutcome check_theorem(TheoremId id, GraphFacts& facts, const CheckOptions& options = {});
TheoremOutcome check_theorem(TheoremId id, const Graph& g, const CheckOptions& options = {});

}  // namespace oidom
