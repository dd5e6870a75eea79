#include <string>
#include <utility>
#include <vector>

#include "oidom/classic.hpp"
#include "oidom/families.hpp"
#include "oidom/isomorphism.hpp"

namespace oidom {

namespace {

// Shared by Phi (floor 1, slack 1, any clique size) and Psi (floor 2,
// slack 2, clique size 4).
bool clique_cross_member(const Graph& g, int floor, int slack, int fixed_p) {
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    const VertexSet clique = g.closed_neighbors(x);
    const int p = clique.size();
    if (fixed_p ? p != fixed_p : (p < 3 || p > n - 2)) continue;
    if (!is_clique(g, clique)) continue;
    const VertexSet outer = g.vertices() - clique;
    if (outer.empty() || !is_independent(g, outer)) continue;
    const VertexSet rest = clique - VertexSet::single(x);
    bool ok = true;
    for (int j : outer) {
      if ((g.neighbors(j) & rest).size() < floor) {
        ok = false;
        break;
      }
    }
    for (int k : rest) {
      if (!ok) break;
      if ((g.neighbors(k) & outer).size() > outer.size() - slack) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// Splits the core W into a perfectly matched B and an independent U whose
// vertices all have degree r. Vertices with a support neighbour must be in U.
class OmegaCoreSearch {
 public:
  OmegaCoreSearch(const Graph& g, VertexSet core, VertexSet supports, int r)
      : g_(g), core_(core.to_vector()), supports_(supports), r_(r) {}

  bool run() { return assign(0); }

 private:
  bool assign(std::size_t i) {
    if (i == core_.size()) return complete();
    const int v = core_[i];
    const VertexSet nb = g_.neighbors(v);
    const bool may_be_u = g_.degree(v) == r_ && (nb & u_).empty();
    const bool may_be_b = (nb & supports_).empty() && (nb & b_).size() <= 1 && matched_ok(nb & b_);
    if (may_be_b) {
      b_.insert(v);
      if (assign(i + 1)) return true;
      b_.erase(v);
    }
    if (may_be_u) {
      u_.insert(v);
      if (assign(i + 1)) return true;
      u_.erase(v);
    }
    return false;
  }

  // A new B vertex may join an earlier B vertex only if that one has no
  // other B partner yet.
  bool matched_ok(VertexSet b_neighbors) const {
    for (int w : b_neighbors) {
      if ((g_.neighbors(w) & b_).size() >= 1) return false;
    }
    return true;
  }

  bool complete() const {
    if (u_.empty()) return false;
    for (int v : b_) {
      if ((g_.neighbors(v) & b_).size() != 1) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<int> core_;
  VertexSet supports_;
  int r_;
  VertexSet b_;
  VertexSet u_;
};

bool is_ladder(const Graph& g, int rungs) {
  const int n = g.order();
  if (n != 2 * rungs || rungs < 2 || g.size() != 3 * rungs - 2) return false;
  const Graph target = classic::cartesian_product(classic::path(rungs), classic::path(2));
  for (int c = 0; c < n; ++c) {
    if (g.degree(c) != 2) continue;
    for (int d : g.neighbors(c)) {
      if (g.degree(d) != 2) continue;
      std::vector<int> perm(n, -1);
      int x = c, y = d, px = -1, py = -1;
      bool ok = true;
      for (int i = 0; i < rungs && ok; ++i) {
        if (perm[x] != -1 || perm[y] != -1 || !g.adjacent(x, y)) {
          ok = false;
          break;
        }
        perm[x] = 2 * i;
        perm[y] = 2 * i + 1;
        if (i + 1 == rungs) break;
        VertexSet nx = g.neighbors(x) - VertexSet::single(y);
        VertexSet ny = g.neighbors(y) - VertexSet::single(x);
        if (px >= 0) nx.erase(px);
        if (py >= 0) ny.erase(py);
        if (nx.size() != 1 || ny.size() != 1) {
          ok = false;
          break;
        }
        px = x;
        py = y;
        x = nx.front();
        y = ny.front();
      }
      if (ok && g.relabeled(perm) == target) return true;
    }
  }
  return false;
}

}  // namespace

bool in_lambda(const Graph& g) {
  const int n = g.order();
  if (n < 5) return false;
  for (const Edge& e : g.edges()) {
    const VertexSet rest = g.vertices() - VertexSet{e.u, e.v};
    if (!is_independent(g, rest)) continue;
    const VertexSet na = g.neighbors(e.u) & rest;
    const VertexSet nb = g.neighbors(e.v) & rest;
    if ((na | nb) != rest) continue;
    if (!(na - nb).empty() && !(nb - na).empty() && !(na & nb).empty()) return true;
  }
  return false;
}

bool in_phi(const Graph& g) { return clique_cross_member(g, 1, 1, 0); }

bool in_psi(const Graph& g) { return g.order() >= 6 && clique_cross_member(g, 2, 2, 4); }

bool is_galaxy(const Graph& g) {
  for (VertexSet comp : components(g)) {
    const int s = comp.size();
    if (s < 2) return false;
    bool has_centre = false;
    int degree_sum = 0;
    for (int v : comp) {
      degree_sum += g.degree(v);
      has_centre = has_centre || g.degree(v) == s - 1;
    }
    if (!has_centre || degree_sum != 2 * (s - 1)) return false;
  }
  return true;
}

bool in_omega(const Graph& g) {
  const int n = g.order();
  if (n > kOmegaOrderCap) {
    throw FamilyError("omega recognizer limited to order " + std::to_string(kOmegaOrderCap) + ", got " +
                      std::to_string(n));
  }
  if (n == 0 || has_isolated_vertex(g)) return false;
  const DegreeProfile prof = degree_profile(g);
  const VertexSet core = g.vertices() - (prof.leaves | prof.supports);
  if (core.empty()) return is_galaxy(g);

  // K2 components are pendant pairs without attachments; everything else
  // must follow the construction exactly.
  VertexSet k2;
  for (int v : prof.leaves & prof.supports) k2.insert(v);
  const VertexSet supports = prof.supports - k2;
  const VertexSet leaves = prof.leaves - k2;
  for (int s : supports) {
    if (!(g.neighbors(s) - leaves - core).empty()) return false;
  }
  return OmegaCoreSearch(g, core, supports, prof.delta_star).run();
}

bool in_gcal(const Graph& g) {
  if (g.size() == 0) return false;
  VertexSet colour;
  if (!two_coloring(g, colour)) return false;
  int p_total = 0;
  int q_total = 0;
  auto all_degree_two = [&](VertexSet side) {
    for (int v : side) {
      if (g.degree(v) != 2) return false;
    }
    return true;
  };
  for (VertexSet comp : components(g)) {
    if (comp.size() == 1) {
      ++q_total;
      continue;
    }
    VertexSet x = comp & colour;
    VertexSet y = comp - colour;
    if (!all_degree_two(x)) std::swap(x, y);
    if (!all_degree_two(x)) return false;
    p_total += x.size();
    q_total += y.size();
  }
  return p_total >= 1 && q_total >= 2;
}

bool in_theta(const Graph& g) {
  const int n = g.order();
  if (n < 5) return false;
  for (int w = 0; w < n; ++w) {
    if (g.degree(w) != 1) continue;
    const int u = g.neighbors(w).front();
    const VertexSet clique = g.vertices() - VertexSet{u, w};
    if (!is_clique(g, clique)) continue;
    if ((g.neighbors(u) & clique).size() == clique.size() - 1) return true;
  }
  return false;
}

bool in_h_family(const Graph& g) {
  const int n = g.order();
  for (int p = 0; 2 * (p + 2) <= n; ++p) {
    if (n % (p + 2) != 0) continue;
    if (are_isomorphic(g, generate(HSpec{n / (p + 2), p}), Graph::kMaxOrder)) return true;
  }
  return false;
}

bool in_grid(const Graph& g) {
  const int n = g.order();
  if (n == 0 || n % 6 != 0) return false;
  return is_ladder(g, n / 2);
}

bool recognize(const Graph& g, FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Lambda: return in_lambda(g);
    case FamilyTag::Phi: return in_phi(g);
    case FamilyTag::Psi: return in_psi(g);
    case FamilyTag::Omega: return in_omega(g);
    case FamilyTag::GCal: return in_gcal(g);
    case FamilyTag::Theta: return in_theta(g);
    case FamilyTag::HFamily: return in_h_family(g);
    case FamilyTag::Grid: return in_grid(g);
    case FamilyTag::Classic: break;
  }
  throw FamilyError("classic recognition needs a graph name");
}

bool recognize_classic(const Graph& g, std::string_view name) {
  const int n = g.order();
  const std::string key(name);
  if (key == "complete") return is_complete(g);
  if (key == "empty") return g.size() == 0;
  if (key == "cycle") return n >= 3 && is_regular(g, 2) && is_connected(g);
  if (key == "path") return n >= 1 && is_tree(g) && degree_profile(g).max_degree <= 2;
  if (key == "star") return n >= 1 && is_tree(g) && (n <= 2 || degree_profile(g).max_degree == n - 1);
  if (key == "matching") return n % 2 == 0 && is_regular(g, 1);
  if (key == "biclique") {
    VertexSet side;
    if (!is_connected(g) || n < 2 || !two_coloring(g, side)) return false;
    return g.size() == side.size() * (n - side.size());
  }
  throw FamilyError("unknown classic graph '" + key + "'");
}

}  // namespace oidom
