#pragma once

/// \file enumerate.hpp
/// Streams of small graphs: every labeled graph of an order, one
/// representative per isomorphism class, or the lines of a graph6 file.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oidom/graph.hpp"

namespace oidom {

enum class EnumerationMode { Labeled, Canonical, File };

std::string_view mode_key(EnumerationMode mode);
std::optional<EnumerationMode> parse_mode_key(std::string_view key);

inline constexpr int kDefaultEnumerationCeiling = 7;
inline constexpr int kLargeEnumerationCeiling = 8;

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 7 normally; 8 when `allow_large` is set or OIDOM_MAX_N asks for it.
int enumeration_ceiling(bool allow_large);

/// 2^(n(n-1)/2).
std::uint64_t labeled_count(int n);

/// Edge k of the mask is the k-th pair in the order (0,1), (0,2), (1,2),
/// (0,3), ... (columns of the upper triangle, as in graph6).
Graph labeled_graph(int n, std::uint64_t mask);

/// Calls `visit` for every labeled graph of order n in mask order.
void for_each_labeled(int n, const std::function<void(const Graph&)>& visit, bool allow_large = false);

/// One representative per isomorphism class, each in canonical labeling,
/// sorted by canonical form. Built by vertex augmentation.
std::vector<Graph> canonical_graphs(int n, bool allow_large = false);

/// Graphs of a graph6 file in file order; errors carry the line number.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace oidom
