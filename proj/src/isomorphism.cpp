#include "oidom/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace oidom {

namespace {

// Vertex invariant used to restrict candidate orders: the degree, then the
// sorted multiset of neighbour degrees, folded into one sortable key.
std::vector<std::vector<int>> vertex_keys(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) {
    keys[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    keys[v].insert(keys[v].end(), nd.begin(), nd.end());
  }
  return keys;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    const auto keys = vertex_keys(g);
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    // Position p may only hold vertices from the same key class as order[p].
    for (int p = 0; p < n_; ++p) {
      VertexSet cls;
      for (int v = 0; v < n_; ++v) {
        if (keys[v] == keys[order[p]]) cls.insert(v);
      }
      allowed_[p] = cls;
    }
    current_.assign(n_, 0);
    best_.assign(n_, ~std::uint64_t{0});
    placed_.assign(n_, -1);
  }

  CanonicalForm run() {
    if (n_ > 0) extend(0, VertexSet());
    return CanonicalForm{n_, n_ == 0 ? std::vector<std::uint64_t>{} : best_};
  }

  const std::vector<int>& best_order() const { return best_order_; }

 private:
  void extend(int pos, VertexSet used) {
    if (pos == n_) {
      if (!found_ || current_ < best_) {
        best_ = current_;
        best_order_ = placed_;
        found_ = true;
      }
      return;
    }
    VertexSet tried;
    for (int v : allowed_[pos] - used) {
      // Swapping two unplaced twins is an automorphism fixing the prefix.
      if (has_twin_in(v, tried)) continue;
      tried.insert(v);
      std::uint64_t row = 0;
      for (int q = 0; q < pos; ++q) {
        if (g_.adjacent(v, placed_[q])) row |= std::uint64_t{1} << (pos - 1 - q);
      }
      current_[pos] = row;
      if (found_ && prefix_exceeds_best(pos)) continue;
      placed_[pos] = v;
      extend(pos + 1, used | VertexSet::single(v));
    }
  }

  bool has_twin_in(int v, VertexSet candidates) const {
    for (int u : candidates) {
      const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
      if ((g_.row(u) & mask) == (g_.row(v) & mask)) return true;
    }
    return false;
  }

  bool prefix_exceeds_best(int pos) const {
    for (int q = 0; q <= pos; ++q) {
      if (current_[q] != best_[q]) return current_[q] > best_[q];
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::array<VertexSet, Graph::kMaxOrder> allowed_{};
  std::vector<std::uint64_t> current_;
  std::vector<std::uint64_t> best_;
  std::vector<int> placed_;
  std::vector<int> best_order_;
  bool found_ = false;
};

void check_cap(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw IsomorphismCapError("isomorphism test limited to order " + std::to_string(cap) + ", got " +
                              std::to_string(g.order()));
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, int cap) {
  check_cap(g, cap);
  return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph& g, int cap) {
  check_cap(g, cap);
  CanonicalSearch search(g);
  search.run();
  const auto& order = search.best_order();
  std::vector<int> perm(g.order());
  for (int p = 0; p < g.order(); ++p) perm[order[p]] = p;
  return g.relabeled(perm);
}

bool are_isomorphic(const Graph& g, const Graph& h, int cap) {
  check_cap(g, cap);
  check_cap(h, cap);
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> dg(g.order());
  std::vector<int> dh(h.order());
  for (int v = 0; v < g.order(); ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g, cap) == canonical_form(h, cap);
}

}  // namespace oidom
