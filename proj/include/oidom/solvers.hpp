#pragma once

/// \file solvers.hpp
/// Validity checks and exact minimum (maximum for ALPHA) solvers with
/// certificates for the outer-independent domination parameters and the
/// classical parameters they are compared against.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oidom/graph.hpp"

namespace oidom {

enum class ParamKind {
  Toid,     ///< total outer-independent domination number
  TwoOid,   ///< 2-outer-independent domination number
  Doid,     ///< double outer-independent domination number
  Alpha,    ///< independence number
  Gamma,    ///< domination number
  GammaT,   ///< total domination number
  GammaX2,  ///< double domination number
};

inline constexpr ParamKind kAllParams[] = {ParamKind::Toid,  ParamKind::TwoOid, ParamKind::Doid,
                                           ParamKind::Alpha, ParamKind::Gamma,  ParamKind::GammaT,
                                           ParamKind::GammaX2};

/// CLI spelling: toid, 2oid, doid, alpha, gamma, gamma-t, gamma-x2.
std::string_view param_key(ParamKind kind);
/// Display name, e.g. "gamma_2^oi".
std::string_view param_symbol(ParamKind kind);
std::optional<ParamKind> parse_param_key(std::string_view key);

/// True for parameters that need every vertex to have a neighbour.
bool requires_isolate_free(ParamKind kind);

struct ParamResult {
  /// Empty when the parameter is undefined (isolated vertex).
  std::optional<int> value;
  /// The optimal set; empty when undefined.
  VertexSet certificate;

  bool defined() const { return value.has_value(); }
  friend bool operator==(const ParamResult&, const ParamResult&) = default;
};

/// Whether `s` satisfies the defining conditions of `kind` (for ALPHA: `s`
/// is independent).
bool check_set(const Graph& g, VertexSet s, ParamKind kind);

/// Human-readable description of the first violated condition, or nullopt
/// when the set is valid.
std::optional<std::string> first_violation(const Graph& g, VertexSet s, ParamKind kind);

/// Exact optimum by branch and bound. Among optimal sets the certificate is
/// the first in certificate_less order.
ParamResult solve(const Graph& g, ParamKind kind);

/// Node cap for the branch and bound; nullopt from solve_bounded means the
/// cap was hit before optimality was proven.
struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
};

std::optional<ParamResult> solve_bounded(const Graph& g, ParamKind kind, SearchBudget budget);

inline constexpr int kNaiveOrderGuard = 20;

class SolverGuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reference solver: scans subsets by cardinality (ascending; descending for
/// ALPHA) and, within a cardinality, in lexicographic order of the sorted
/// member lists. Same contract as solve. Throws SolverGuardError above
/// `guard` vertices.
ParamResult solve_naive(const Graph& g, ParamKind kind, int guard = kNaiveOrderGuard);

}  // namespace oidom
