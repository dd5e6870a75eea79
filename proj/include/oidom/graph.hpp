#pragma once

/// \file graph.hpp
/// Simple undirected graphs on at most 64 vertices, one adjacency word per
/// vertex, plus the vertex-subset type used for every certificate.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oidom {

/// Raised for malformed graph input (bad endpoints, loops, order too large).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of {0, ..., 63}, stored as a single machine word.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  /// {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  /// One past the largest member (0 for the empty set).
  constexpr int bound() const { return 64 - std::countl_zero(bits_); }

  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<int> to_vector() const;

  /// "{0,2,5}".
  std::string to_string() const;

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Certificate order used for tie-breaking: smaller sets first, then the
/// lexicographic order of the sorted member lists ({0,2} before {1,2}).
bool certificate_less(VertexSet a, VertexSet b);

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph. Vertex i's neighbourhood is one 64-bit word.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  /// Throws GraphError on out-of-range endpoints or loops; duplicates are merged.
  static Graph from_edge_list(int order, std::span<const Edge> edges);
  static Graph from_edge_list(int order, std::initializer_list<Edge> edges) {
    return from_edge_list(order, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Adjacency rows must be loop-free, symmetric and within range.
  static Graph from_adjacency(std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  /// Number of edges.
  int size() const;
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighbors(int v) const { return VertexSet(adj_[v] | (std::uint64_t{1} << v)); }
  std::uint64_t row(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  Graph complement() const;
  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;
  /// Subgraph induced by `keep`, renumbered in increasing order.
  Graph induced(VertexSet keep) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> adj_{};

  friend class GraphBuilder;
};

/// Mutable staging area for constructing a Graph edge by edge.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order);
  GraphBuilder& add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return g_.adjacent(u, v); }
  int order() const { return g_.n_; }
  Graph build() const { return g_; }

 private:
  Graph g_;
};

// Structural predicates.

bool is_independent(const Graph& g, VertexSet s);
bool is_clique(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_regular(const Graph& g, int degree);
bool is_complete(const Graph& g);
bool has_isolated_vertex(const Graph& g);
/// Connected acyclic with at least one vertex.
bool is_tree(const Graph& g);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Two-colouring (bit set = side 1), if one exists; components are coloured
/// with their smallest vertex on side 0.
bool two_coloring(const Graph& g, VertexSet& side_one);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  VertexSet leaves;
  VertexSet supports;
  /// Minimum degree over vertices that are neither leaves nor supports; 2 when
  /// there are no such vertices.
  int delta_star = 2;
};

DegreeProfile degree_profile(const Graph& g);

}  // namespace oidom
