#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>

#include "oidom/enumerate.hpp"
#include "oidom/graph6.hpp"
#include "oidom/isomorphism.hpp"

namespace oidom {

std::string_view mode_key(EnumerationMode mode) {
  switch (mode) {
    case EnumerationMode::Labeled: return "labeled";
    case EnumerationMode::Canonical: return "canonical";
    case EnumerationMode::File: return "file";
  }
  return "?";
}

std::optional<EnumerationMode> parse_mode_key(std::string_view key) {
  for (auto m : {EnumerationMode::Labeled, EnumerationMode::Canonical, EnumerationMode::File}) {
    if (mode_key(m) == key) return m;
  }
  return std::nullopt;
}

int enumeration_ceiling(bool allow_large) {
  if (allow_large) return kLargeEnumerationCeiling;
  if (const char* env = std::getenv("OIDOM_MAX_N")) {
    const int requested = std::atoi(env);
    if (requested > kDefaultEnumerationCeiling) return kLargeEnumerationCeiling;
  }
  return kDefaultEnumerationCeiling;
}

namespace {

void check_order(int n, bool allow_large) {
  const int ceiling = enumeration_ceiling(allow_large);
  if (n < 0 || n > ceiling) {
    throw EnumerationError("enumeration order " + std::to_string(n) + " outside 0.." + std::to_string(ceiling) +
                           (ceiling < kLargeEnumerationCeiling ? " (order 8 needs the large-order override)" : ""));
  }
}

}  // namespace

std::uint64_t labeled_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<std::uint64_t> rows(n, 0);
  int k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if ((mask >> k) & 1U) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
      }
    }
  }
  return Graph::from_adjacency(rows);
}

void for_each_labeled(int n, const std::function<void(const Graph&)>& visit, bool allow_large) {
  check_order(n, allow_large);
  const std::uint64_t total = labeled_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(labeled_graph(n, mask));
}

std::vector<Graph> canonical_graphs(int n, bool allow_large) {
  check_order(n, allow_large);
  if (n == 0) return {Graph(0)};
  std::vector<Graph> previous = canonical_graphs(n - 1, allow_large);
  std::map<CanonicalForm, Graph> seen;
  for (const Graph& h : previous) {
    for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
      GraphBuilder b(n);
      for (const Edge& e : h.edges()) b.add_edge(e.u, e.v);
      for (int v : VertexSet(nb)) b.add_edge(v, n - 1);
      const Graph g = b.build();
      CanonicalForm form = canonical_form(g, n);
      if (!seen.contains(form)) seen.emplace(std::move(form), canonical_graph(g, n));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [form, g] : seen) out.push_back(g);
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EnumerationError("cannot read graph6 file '" + path + "'");
  return read_graph6_lines(in);
}

}  // namespace oidom
