#pragma once

/// \file sweep.hpp
/// Exhaustive theorem checking over enumerated graphs, with a deterministic
/// JSON report regardless of the worker count.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oidom/enumerate.hpp"
#include "oidom/theorems.hpp"

namespace oidom {

inline constexpr std::size_t kStoredCaseCap = 100;

struct ViolationEntry {
  std::string g6;
  std::string reason;
  std::vector<std::pair<std::string, int>> values;

  friend bool operator<(const ViolationEntry& a, const ViolationEntry& b) { return a.g6 < b.g6; }
};

struct EqualityEntry {
  std::string g6;
  std::string bound;
  std::vector<std::pair<std::string, int>> values;
  std::optional<bool> recognized;

  friend bool operator<(const EqualityEntry& a, const EqualityEntry& b) {
    return std::tie(a.g6, a.bound) < std::tie(b.g6, b.bound);
  }
};

struct TheoremTally {
  TheoremId id{};
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t violations_total = 0;
  std::uint64_t equality_total = 0;
  /// Equality cases whose recognizer verdict was true.
  std::uint64_t equality_recognized = 0;
  std::vector<ViolationEntry> violations;      ///< sorted by g6, capped
  std::vector<EqualityEntry> equality_cases;  ///< sorted by g6, capped

  void record(const std::string& g6, const TheoremOutcome& outcome);
  /// Associative and commutative; keeps the smallest entries by g6.
  void merge(const TheoremTally& other);
  void finish();
};

/// Products toid(G) * toid(co-G) over order-4 graphs with G and co-G
/// isolate-free.
struct ProductCensus {
  std::uint64_t pairs = 0;
  std::map<int, std::uint64_t> products;
  /// Graphs isomorphic to C4 or 2P2.
  std::uint64_t c4_or_2p2 = 0;
  /// Graphs where (product == 12) and (G is C4 or 2P2) disagree.
  std::uint64_t mismatches = 0;

  void record(GraphFacts& facts);
  void merge(const ProductCensus& other);
  bool holds() const;
};

struct SweepOptions {
  int n_min = 4;
  int n_max = 6;
  std::vector<TheoremId> theorems{kAllTheorems.begin(), kAllTheorems.end()};
  EnumerationMode mode = EnumerationMode::Labeled;
  std::string source;  ///< graph6 file for File mode
  int jobs = 1;
  bool allow_large = false;
  bool timing = false;
  CheckOptions check;
};

struct SweepReport {
  std::vector<int> orders;
  EnumerationMode mode = EnumerationMode::Labeled;
  std::uint64_t graphs = 0;
  std::vector<TheoremTally> theorems;
  std::optional<ProductCensus> census;  ///< present when order 4 was swept
  std::optional<std::int64_t> wall_ms;

  bool passed() const;
  const TheoremTally* find(TheoremId id) const;
  nlohmann::ordered_json to_json() const;
};

/// Throws EnumerationError for out-of-range orders or unreadable files and
/// ConsistencyError when a solver contradicts a filter.
SweepReport sweep(const SweepOptions& options);

/// Pretty-printed JSON with a trailing newline.
std::string report_json_text(const SweepReport& report);

}  // namespace oidom
