#include <algorithm>
#include <string>

#include "oidom/family_json.hpp"

namespace oidom {

using nlohmann::json;

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FamilyError(std::string("family spec key '") + key + "': " + e.what());
  }
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get_or<T>(j, key, T{});
}

std::optional<std::vector<Edge>> edges_from(const json& j, const char* key) {
  auto pairs = get_optional<std::vector<std::pair<int, int>>>(j, key);
  if (!pairs) return std::nullopt;
  std::vector<Edge> out;
  for (auto [u, v] : *pairs) out.push_back({u, v});
  return out;
}

json edges_to(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

}  // namespace

json family_spec_to_json(const FamilySpec& spec) {
  json j;
  j["family"] = std::string(family_key(family_tag(spec)));
  if (auto* s = std::get_if<LambdaSpec>(&spec)) {
    j["a"] = s->a_size;
    j["b"] = s->b_size;
    j["c"] = s->c_size;
  } else if (auto* s = std::get_if<PhiSpec>(&spec)) {
    j["n"] = s->n;
    j["p"] = s->p;
    j["seed"] = s->seed;
    if (s->cross_edges) j["cross_edges"] = edges_to(*s->cross_edges);
  } else if (auto* s = std::get_if<PsiSpec>(&spec)) {
    j["n"] = s->n;
    j["seed"] = s->seed;
    if (s->cross_edges) j["cross_edges"] = edges_to(*s->cross_edges);
  } else if (auto* s = std::get_if<OmegaSpec>(&spec)) {
    j["a"] = s->a;
    j["b"] = s->b;
    j["p"] = s->p;
    j["r"] = s->r;
    j["extra_leaves"] = s->extra_leaves;
    j["seed"] = s->seed;
    if (s->attachments) j["attachments"] = *s->attachments;
  } else if (auto* s = std::get_if<GCalSpec>(&spec)) {
    j["p_size"] = s->p_size;
    j["q_size"] = s->q_size;
    j["seed"] = s->seed;
    if (s->pairs) j["pairs"] = *s->pairs;
  } else if (auto* s = std::get_if<ThetaSpec>(&spec)) {
    j["q"] = s->q;
  } else if (auto* s = std::get_if<HSpec>(&spec)) {
    j["k"] = s->k;
    j["p"] = s->p;
  } else if (auto* s = std::get_if<GridSpec>(&spec)) {
    j["k"] = s->k;
  } else if (auto* s = std::get_if<ClassicSpec>(&spec)) {
    j["name"] = s->name;
    j["n"] = s->n;
    j["a"] = s->a;
    j["b"] = s->b;
  }
  return j;
}

FamilySpec family_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw FamilyError("family spec must be an object with a string 'family' key");
  }
  const std::string key = j.at("family").get<std::string>();
  const auto tag = parse_family_key(key);
  if (!tag) throw FamilyError("unknown family '" + key + "'");
  switch (*tag) {
    case FamilyTag::Lambda:
      return LambdaSpec{get_or(j, "a", 1), get_or(j, "b", 1), get_or(j, "c", 1)};
    case FamilyTag::Phi: {
      PhiSpec s;
      s.n = get_or(j, "n", s.n);
      s.p = get_or(j, "p", s.p);
      s.cross_edges = edges_from(j, "cross_edges");
      s.seed = get_or<std::uint64_t>(j, "seed", 0);
      s.retry_cap = get_or(j, "retry_cap", s.retry_cap);
      return s;
    }
    case FamilyTag::Psi: {
      PsiSpec s;
      s.n = get_or(j, "n", s.n);
      s.cross_edges = edges_from(j, "cross_edges");
      s.seed = get_or<std::uint64_t>(j, "seed", 0);
      s.retry_cap = get_or(j, "retry_cap", s.retry_cap);
      return s;
    }
    case FamilyTag::Omega: {
      OmegaSpec s;
      s.a = get_or(j, "a", s.a);
      s.b = get_or(j, "b", s.b);
      s.p = get_or(j, "p", s.p);
      s.r = get_or(j, "r", s.r);
      s.extra_leaves = get_or(j, "extra_leaves", std::vector<int>(std::max(s.b, 0), 0));
      s.attachments = get_optional<std::vector<std::vector<int>>>(j, "attachments");
      s.seed = get_or<std::uint64_t>(j, "seed", 0);
      s.retry_cap = get_or(j, "retry_cap", s.retry_cap);
      return s;
    }
    case FamilyTag::GCal: {
      GCalSpec s;
      s.p_size = get_or(j, "p_size", s.p_size);
      s.q_size = get_or(j, "q_size", s.q_size);
      s.pairs = get_optional<std::vector<std::pair<int, int>>>(j, "pairs");
      s.seed = get_or<std::uint64_t>(j, "seed", 0);
      return s;
    }
    case FamilyTag::Theta:
      return ThetaSpec{get_or(j, "q", 3)};
    case FamilyTag::HFamily:
      return HSpec{get_or(j, "k", 2), get_or(j, "p", 0)};
    case FamilyTag::Grid:
      return GridSpec{get_or(j, "k", 1)};
    case FamilyTag::Classic: {
      ClassicSpec s;
      s.name = get_or<std::string>(j, "name", s.name);
      s.n = get_or(j, "n", s.n);
      s.a = get_or(j, "a", s.a);
      s.b = get_or(j, "b", s.b);
      return s;
    }
  }
  throw FamilyError("unknown family '" + key + "'");
}

}  // namespace oidom
