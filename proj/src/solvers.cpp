#include "oidom/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace oidom {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::string edge_text(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

std::optional<std::string> outside_edge(const Graph& g, VertexSet s) {
  const VertexSet outside = g.vertices() - s;
  for (int v : outside) {
    const VertexSet hit = g.neighbors(v) & outside;
    if (!hit.empty()) {
      return "complement not independent: edge " + edge_text(std::min(v, hit.front()), std::max(v, hit.front())) +
             " lies outside the set";
    }
  }
  return std::nullopt;
}

std::optional<std::string> every_vertex_needs(const Graph& g, VertexSet s, bool closed, int need,
                                              bool outside_only) {
  for (int v = 0; v < g.order(); ++v) {
    if (outside_only && s.contains(v)) continue;
    const VertexSet cover = closed ? g.closed_neighbors(v) : g.neighbors(v);
    const int have = (cover & s).size();
    if (have >= need) continue;
    std::string what = "vertex " + std::to_string(v);
    if (closed) {
      what += " has |N[v] & S| = " + std::to_string(have) + " < " + std::to_string(need);
    } else if (need == 1) {
      what += " has no neighbor in the set";
    } else {
      what += " has " + std::to_string(have) + " neighbor(s) in the set, needs " + std::to_string(need);
    }
    return what;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Complement-side search. The OID parameters are n minus the largest
// independent I such that every vertex of I has the required degree and, for
// TOID/DOID, every vertex outside I keeps a neighbour outside I.

class IndependentSideSearch {
 public:
  IndependentSideSearch(const Graph& g, VertexSet eligible, bool need_partner, bool prefer_include,
                        std::uint64_t max_nodes)
      : g_(g),
        eligible_(eligible.bits()),
        need_partner_(need_partner),
        prefer_include_(prefer_include),
        max_nodes_(max_nodes) {
    for (int v = 0; v < g.order(); ++v) adj_[v] = g.row(v);
  }

  // Returns false when the node budget ran out.
  bool run() {
    seed_target();
    descend(0, eligible_, 0);
    return !aborted_;
  }

  VertexSet best() const { return VertexSet(best_); }

 private:
  void seed_target() {
    // Minimum-degree greedy; accepted only if it satisfies the side condition.
    std::uint64_t cand = eligible_;
    std::uint64_t chosen = 0;
    int size = 0;
    while (cand) {
      int pick = -1;
      int pick_deg = 65;
      for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int d = std::popcount(adj_[v] & cand);
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      chosen |= bit(pick);
      ++size;
      cand &= ~(adj_[pick] | bit(pick));
    }
    if (!need_partner_ || partners_ok(chosen)) target_ = size;
  }

  bool partners_ok(std::uint64_t independent) const {
    const std::uint64_t outside = VertexSet::range(g_.order()).bits() & ~independent;
    for (std::uint64_t rest = outside; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((adj_[v] & outside) == 0) return false;
    }
    return true;
  }

  int clique_cover(std::uint64_t cand) const {
    int cliques = 0;
    while (cand) {
      const int c = std::countr_zero(cand);
      cand &= ~bit(c);
      std::uint64_t grow = cand & adj_[c];
      while (grow) {
        const int d = std::countr_zero(grow);
        cand &= ~bit(d);
        grow &= adj_[d] & ~bit(d);
      }
      ++cliques;
    }
    return cliques;
  }

  void record(std::uint64_t independent, int size) {
    if (size >= target_) {
      best_ = independent;
      best_size_ = size;
      target_ = size + 1;
    }
  }

  void descend(std::uint64_t independent, std::uint64_t cand, int size) {
    if (aborted_) return;
    if (max_nodes_ != 0 && ++nodes_ > max_nodes_) {
      aborted_ = true;
      return;
    }
    if (cand == 0) {
      record(independent, size);
      return;
    }
    if (size + std::popcount(cand) < target_) return;
    if (size + clique_cover(cand) < target_) return;

    const int v = std::countr_zero(cand);
    if (prefer_include_) {
      include(independent, cand, size, v);
      exclude(independent, cand, size, v);
    } else {
      exclude(independent, cand, size, v);
      include(independent, cand, size, v);
    }
  }

  void exclude(std::uint64_t independent, std::uint64_t cand, int size, int v) {
    if (need_partner_ && (adj_[v] & ~independent) == 0) return;
    descend(independent, cand & ~bit(v), size);
  }

  void include(std::uint64_t independent, std::uint64_t cand, int size, int v) {
    const std::uint64_t next = independent | bit(v);
    if (need_partner_) {
      for (std::uint64_t rest = adj_[v]; rest; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        if ((adj_[u] & ~next) == 0) return;
      }
    }
    descend(next, cand & ~(adj_[v] | bit(v)), size + 1);
  }

  const Graph& g_;
  std::array<std::uint64_t, Graph::kMaxOrder> adj_{};
  std::uint64_t eligible_;
  bool need_partner_;
  bool prefer_include_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  int target_ = 0;
  std::uint64_t best_ = 0;
  int best_size_ = -1;
};

// ---------------------------------------------------------------------------
// Direct search over the dominating set S for GAMMA, GAMMA_T and GAMMA_X2:
// vertices decided in index order, inclusion first.

class DominationSearch {
 public:
  DominationSearch(const Graph& g, bool closed, int need, std::uint64_t max_nodes)
      : g_(g), n_(g.order()), need_(need), max_nodes_(max_nodes) {
    int widest = 1;
    for (int v = 0; v < n_; ++v) {
      cover_[v] = closed ? g.closed_neighbors(v).bits() : g.row(v);
      covered_by_[v] = cover_[v];  // symmetric relation
      widest = std::max(widest, std::popcount(covered_by_[v]));
    }
    widest_ = widest;
    best_size_ = n_ + 1;
  }

  bool run() {
    descend(0, 0, 0);
    return !aborted_;
  }

  VertexSet best() const { return VertexSet(best_); }

 private:
  int deficit(std::uint64_t chosen) const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::max(0, need_ - std::popcount(cover_[v] & chosen));
    return total;
  }

  void descend(int i, std::uint64_t chosen, int size) {
    if (aborted_) return;
    if (max_nodes_ != 0 && ++nodes_ > max_nodes_) {
      aborted_ = true;
      return;
    }
    const int missing = deficit(chosen);
    const int lower = (missing + widest_ - 1) / widest_;
    if (size + lower >= best_size_) return;
    if (i == n_) {
      if (missing != 0) return;
      best_ = chosen;
      best_size_ = size;
      return;
    }
    descend(i + 1, chosen | bit(i), size + 1);
    // Excluding i: every vertex that i could cover must still be satisfiable.
    const std::uint64_t open = chosen | (VertexSet::range(n_).bits() & ~VertexSet::range(i + 1).bits());
    for (std::uint64_t rest = covered_by_[i]; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (std::popcount(cover_[v] & open) < need_) return;
    }
    descend(i + 1, chosen, size);
  }

  const Graph& g_;
  int n_;
  int need_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::array<std::uint64_t, Graph::kMaxOrder> cover_{};
  std::array<std::uint64_t, Graph::kMaxOrder> covered_by_{};
  int widest_ = 1;
  std::uint64_t best_ = 0;
  int best_size_;
};

VertexSet min_degree_vertices(const Graph& g, int min_degree) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= min_degree) out.insert(v);
  }
  return out;
}

}  // namespace

std::string_view param_key(ParamKind kind) {
  switch (kind) {
    case ParamKind::Toid: return "toid";
    case ParamKind::TwoOid: return "2oid";
    case ParamKind::Doid: return "doid";
    case ParamKind::Alpha: return "alpha";
    case ParamKind::Gamma: return "gamma";
    case ParamKind::GammaT: return "gamma-t";
    case ParamKind::GammaX2: return "gamma-x2";
  }
  return "?";
}

std::string_view param_symbol(ParamKind kind) {
  switch (kind) {
    case ParamKind::Toid: return "gamma_t^oi";
    case ParamKind::TwoOid: return "gamma_2^oi";
    case ParamKind::Doid: return "gamma_d^oi";
    case ParamKind::Alpha: return "alpha";
    case ParamKind::Gamma: return "gamma";
    case ParamKind::GammaT: return "gamma_t";
    case ParamKind::GammaX2: return "gamma_x2";
  }
  return "?";
}

std::optional<ParamKind> parse_param_key(std::string_view key) {
  for (ParamKind k : kAllParams) {
    if (param_key(k) == key) return k;
  }
  return std::nullopt;
}

bool requires_isolate_free(ParamKind kind) {
  return kind == ParamKind::Toid || kind == ParamKind::Doid || kind == ParamKind::GammaT ||
         kind == ParamKind::GammaX2;
}

std::optional<std::string> first_violation(const Graph& g, VertexSet s, ParamKind kind) {
  if (!s.is_subset_of(g.vertices())) return "set contains vertices outside the graph";
  switch (kind) {
    case ParamKind::Toid:
      if (auto e = outside_edge(g, s)) return e;
      return every_vertex_needs(g, s, false, 1, false);
    case ParamKind::TwoOid:
      if (auto e = outside_edge(g, s)) return e;
      return every_vertex_needs(g, s, false, 2, true);
    case ParamKind::Doid:
      if (auto e = outside_edge(g, s)) return e;
      return every_vertex_needs(g, s, true, 2, false);
    case ParamKind::Alpha:
      for (int v : s) {
        const VertexSet hit = g.neighbors(v) & s;
        if (!hit.empty()) return "set not independent: edge " + edge_text(v, hit.front()) + " inside the set";
      }
      return std::nullopt;
    case ParamKind::Gamma:
      return every_vertex_needs(g, s, false, 1, true);
    case ParamKind::GammaT:
      return every_vertex_needs(g, s, false, 1, false);
    case ParamKind::GammaX2:
      return every_vertex_needs(g, s, true, 2, false);
  }
  return std::nullopt;
}

bool check_set(const Graph& g, VertexSet s, ParamKind kind) {
  if (!s.is_subset_of(g.vertices())) return false;
  const std::uint64_t outside = g.vertices().bits() & ~s.bits();
  auto outside_independent = [&] {
    for (std::uint64_t rest = outside; rest; rest &= rest - 1) {
      if (g.row(std::countr_zero(rest)) & outside) return false;
    }
    return true;
  };
  auto all = [&](std::uint64_t who, auto pred) {
    for (std::uint64_t rest = who; rest; rest &= rest - 1) {
      if (!pred(std::countr_zero(rest))) return false;
    }
    return true;
  };
  const std::uint64_t everyone = g.vertices().bits();
  const std::uint64_t set = s.bits();
  switch (kind) {
    case ParamKind::Toid:
      return outside_independent() && all(everyone, [&](int v) { return (g.row(v) & set) != 0; });
    case ParamKind::TwoOid:
      return outside_independent() && all(outside, [&](int v) { return std::popcount(g.row(v) & set) >= 2; });
    case ParamKind::Doid:
      return outside_independent() &&
             all(everyone, [&](int v) { return std::popcount((g.row(v) | bit(v)) & set) >= 2; });
    case ParamKind::Alpha:
      return is_independent(g, s);
    case ParamKind::Gamma:
      return all(outside, [&](int v) { return (g.row(v) & set) != 0; });
    case ParamKind::GammaT:
      return all(everyone, [&](int v) { return (g.row(v) & set) != 0; });
    case ParamKind::GammaX2:
      return all(everyone, [&](int v) { return std::popcount((g.row(v) | bit(v)) & set) >= 2; });
  }
  return false;
}

std::optional<ParamResult> solve_bounded(const Graph& g, ParamKind kind, SearchBudget budget) {
  const int n = g.order();
  if (requires_isolate_free(kind) && has_isolated_vertex(g)) return ParamResult{};
  if (n == 0) return ParamResult{0, VertexSet()};

  switch (kind) {
    case ParamKind::Toid:
    case ParamKind::TwoOid:
    case ParamKind::Doid:
    case ParamKind::Alpha: {
      const int min_degree = kind == ParamKind::Alpha ? 0 : (kind == ParamKind::Toid ? 1 : 2);
      const bool need_partner = kind == ParamKind::Toid || kind == ParamKind::Doid;
      IndependentSideSearch search(g, min_degree_vertices(g, min_degree), need_partner,
                                   kind == ParamKind::Alpha, budget.max_nodes);
      if (!search.run()) return std::nullopt;
      const VertexSet independent = search.best();
      if (kind == ParamKind::Alpha) return ParamResult{independent.size(), independent};
      const VertexSet dominating = g.vertices() - independent;
      return ParamResult{dominating.size(), dominating};
    }
    case ParamKind::Gamma:
    case ParamKind::GammaT:
    case ParamKind::GammaX2: {
      const bool closed = kind != ParamKind::GammaT;
      const int need = kind == ParamKind::GammaX2 ? 2 : 1;
      DominationSearch search(g, closed, need, budget.max_nodes);
      if (!search.run()) return std::nullopt;
      return ParamResult{search.best().size(), search.best()};
    }
  }
  return std::nullopt;
}

ParamResult solve(const Graph& g, ParamKind kind) { return *solve_bounded(g, kind, SearchBudget{}); }

}  // namespace oidom
