#include "oidom/graph.hpp"

#include <algorithm>
#include <sstream>

namespace oidom {

namespace {

void check_order(int order) {
  if (order < 0 || order > Graph::kMaxOrder) {
    throw GraphError("graph order " + std::to_string(order) + " outside [0, " +
                     std::to_string(Graph::kMaxOrder) + "]");
  }
}

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) {
    if (v < 0 || v >= 64) throw GraphError("vertex " + std::to_string(v) + " outside [0, 64)");
    insert(v);
  }
}

std::vector<int> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : *this) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

bool certificate_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const VertexSet diff = a ^ b;
  if (diff.empty()) return false;
  return a.contains(diff.front());
}

Graph::Graph(int order) {
  check_order(order);
  n_ = order;
}

Graph Graph::from_edge_list(int order, std::span<const Edge> edges) {
  GraphBuilder builder(order);
  for (const Edge& e : edges) builder.add_edge(e.u, e.v);
  return builder.build();
}

Graph Graph::from_adjacency(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  Graph g(n);
  const std::uint64_t all = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) throw GraphError("adjacency row " + std::to_string(v) + " has bits beyond the order");
    if ((rows[v] >> v) & 1U) throw GraphError("loop at vertex " + std::to_string(v));
    g.adj_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u) {
    for (int v : VertexSet(rows[u])) {
      if (!((rows[v] >> u) & 1U)) throw GraphError("asymmetric adjacency at " + pair_text(u, v));
    }
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(adj_[u] & ~VertexSet::range(u + 1).bits())) out.push_back({u, v});
  }
  return out;
}

Graph Graph::complement() const {
  Graph h(n_);
  const std::uint64_t all = VertexSet::range(n_).bits();
  for (int v = 0; v < n_; ++v) h.adj_[v] = all & ~adj_[v] & ~(std::uint64_t{1} << v);
  return h;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size does not match graph order");
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || ((seen >> p) & 1U)) throw GraphError("not a permutation of the vertex set");
    seen |= std::uint64_t{1} << p;
  }
  Graph h(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) h.adj_[perm[u]] |= std::uint64_t{1} << perm[v];
  }
  return h;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxOrder> index{};
  int next = 0;
  for (int v : keep) index[v] = next++;
  Graph h(next);
  for (int v : keep) {
    for (int w : neighbors(v) & keep) h.adj_[index[v]] |= std::uint64_t{1} << index[w];
  }
  return h;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

GraphBuilder::GraphBuilder(int order) : g_(order) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  const int n = g_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw GraphError("edge " + pair_text(u, v) + " has an endpoint outside [0, " + std::to_string(n) + ")");
  }
  if (u == v) throw GraphError("loop edge " + pair_text(u, v));
  g_.adj_[u] |= std::uint64_t{1} << v;
  g_.adj_[v] |= std::uint64_t{1} << u;
  return *this;
}

void GraphBuilder::remove_edge(int u, int v) {
  g_.adj_[u] &= ~(std::uint64_t{1} << v);
  g_.adj_[v] &= ~(std::uint64_t{1} << u);
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

bool two_coloring(const Graph& g, VertexSet& side_one) {
  side_one = VertexSet();
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet side[2] = {VertexSet::single(unseen.front()), VertexSet()};
    VertexSet frontier = side[0];
    int parity = 0;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      if (!(next & side[parity]).empty()) return false;
      parity ^= 1;
      frontier = next - side[parity];
      side[parity] |= next;
    }
    side_one |= side[1];
    unseen -= side[0] | side[1];
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  VertexSet ignored;
  return two_coloring(g, ignored);
}

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v > u && !(g.neighbors(u) & g.neighbors(v)).empty()) return false;
    }
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  // A claw centred at v is an independent triple inside N(v).
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet nbrs = g.neighbors(v);
    for (int a : nbrs) {
      const VertexSet rest_a = nbrs - g.closed_neighbors(a);
      for (int b : rest_a) {
        if (b < a) continue;
        const VertexSet rest_b = rest_a - g.closed_neighbors(b);
        for (int c : rest_b) {
          if (c > b) return false;
        }
      }
    }
  }
  return true;
}

bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

bool is_complete(const Graph& g) { return is_regular(g, g.order() - 1); }

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.row(v) == 0) return true;
  }
  return false;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  const int n = g.order();
  if (n == 0) return p;
  p.min_degree = n;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    p.min_degree = std::min(p.min_degree, d);
    p.max_degree = std::max(p.max_degree, d);
    if (d == 1) p.leaves.insert(v);
  }
  for (int v : p.leaves) p.supports |= g.neighbors(v);
  const VertexSet core = g.vertices() - (p.leaves | p.supports);
  if (!core.empty()) {
    int best = n;
    for (int v : core) best = std::min(best, g.degree(v));
    p.delta_star = best;
  }
  return p;
}

}  // namespace oidom
