#pragma once

/// \file reductions.hpp
/// Gadget graphs reducing maximum independent set to the 2- and double
/// outer-independent domination problems, and an identity checker.
///
/// Numbering of reduce(g, kind) for g of order n: vertices 0..n-1 are the
/// originals; block i occupies n+5i .. n+5i+4, where n+5i and n+5i+1 form A_i
/// (n+5i is the vertex joined to i) and the remaining three form B_i.

#include <cstdint>
#include <optional>
#include <string_view>

#include "oidom/graph.hpp"
#include "oidom/solvers.hpp"

namespace oidom {

enum class ReductionKind { TwoOidGadget, DoidGadget };

/// "2oid" / "doid".
std::string_view reduction_key(ReductionKind kind);
std::optional<ReductionKind> parse_reduction_key(std::string_view key);

/// The parameter the gadget targets (TwoOid or Doid).
ParamKind target_param(ReductionKind kind);

/// Builds the 6n-vertex gadget graph. Throws GraphError if g is empty, has an
/// isolated vertex, or 6n exceeds the vertex cap.
Graph reduce(const Graph& g, ReductionKind kind);

enum class ReductionStatus { Holds, Fails, Unverified };

std::string_view status_key(ReductionStatus status);

struct ReductionReport {
  int order = 0;             ///< n of the input graph
  std::optional<int> alpha;  ///< empty when unverified
  std::optional<int> param_on_gadget;
  int expected = 0;  ///< 3n - alpha when alpha is known
  ReductionStatus status = ReductionStatus::Unverified;

  bool identity_holds() const { return status == ReductionStatus::Holds; }
};

/// Solves alpha(g) and the target parameter on reduce(g, kind). A solver
/// that exhausts `budget` yields Unverified rather than a verdict.
ReductionReport verify_reduction(const Graph& g, ReductionKind kind, SearchBudget budget = {});

}  // namespace oidom
