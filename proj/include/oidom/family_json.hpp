#pragma once

// JSON form of a family spec: {"family": "<key>", <integer parameters>,
// "seed": N, optional explicit choices}. Keys per family:
//   lambda  a, b, c
//   phi     n, p, cross_edges [[k, j], ...]
//   psi     n, cross_edges
//   omega   a, b, p, r, extra_leaves [..], attachments [[..], ...]
//   gcal    p_size, q_size, pairs [[x, y], ...]
//   theta   q
//   h       k, p
//   grid    k
//   classic name, n, a, b

#include <json.hpp>

#include "oidom/families.hpp"

namespace oidom {

nlohmann::json family_spec_to_json(const FamilySpec& spec);

/// Throws FamilyError on unknown families, missing keys or wrong types.
FamilySpec family_spec_from_json(const nlohmann::json& j);

}  // namespace oidom
