#pragma once

/// \file families.hpp
/// Generators, recognizers and frozen fixtures for the extremal graph
/// families attached to the outer-independent domination bounds.
///
/// Vertex numbering of every generator is fixed:
///   Lambda  a=0, b=1, then the A, B, C classes in that order.
///   Phi     clique 0..p-1 with apex x=0, then J = p..n-1.
///   Psi     clique 0..3 with apex x=0, then R = 4..n-1.
///   Omega   pair i (0-based) is v=2i, v'=2i+1 (first a pairs form B), then
///           u_0..u_{p-1}, then the extra leaves of pair a, a+1, ... in order.
///   GCal    P = 0..|P|-1, then Q.
///   Theta   clique 0..q-1, path vertex u=q joined to 0..q-2, leaf w=q+1.
///   H       cycle 0..2k-1, then clique block i (size p) after the cycle,
///           joined to cycle vertices 2i and 2i+1.
///   Grid    vertex (i, j) of P_{3k} x P_2 is 2i + j.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "oidom/graph.hpp"

namespace oidom {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FamilyTag { Lambda, Phi, Psi, Omega, GCal, Theta, HFamily, Grid, Classic };

std::string_view family_key(FamilyTag tag);
std::optional<FamilyTag> parse_family_key(std::string_view key);

inline constexpr int kDefaultRetryCap = 10000;

/// Path ab plus classes A (adjacent to a only), B (to b only), C (to both).
struct LambdaSpec {
  int a_size = 1;
  int b_size = 1;
  int c_size = 1;
};

/// Clique K_p with apex x, independent J attached to K_p - x subject to
/// (i) every J vertex has a neighbour in K_p - x and (ii) every K_p - x
/// vertex misses at least one J vertex. Cross edges are (clique vertex,
/// J vertex) pairs in generator numbering; when absent they are sampled.
struct PhiSpec {
  int n = 5;
  int p = 3;
  std::optional<std::vector<Edge>> cross_edges;
  std::uint64_t seed = 0;
  int retry_cap = kDefaultRetryCap;
};

/// Clique K_4 with apex x and R = n - 4 further vertices; every R vertex sees
/// at least two of K_4 - x and every K_4 - x vertex sees at most |R| - 2 of R.
struct PsiSpec {
  int n = 10;
  std::optional<std::vector<Edge>> cross_edges;
  std::uint64_t seed = 0;
  int retry_cap = kDefaultRetryCap;
};

/// Pendant pairs, p vertices of degree r attached to the allowed set, and
/// extra leaves on the last b pairs. `attachments[u]` lists the r neighbours
/// of u_u in generator numbering; sampled when absent.
struct OmegaSpec {
  int a = 1;
  int b = 0;
  int p = 1;
  int r = 2;
  std::vector<int> extra_leaves;  // size b
  std::optional<std::vector<std::vector<int>>> attachments;
  std::uint64_t seed = 0;
  int retry_cap = kDefaultRetryCap;
};

/// Every P vertex joined to exactly two Q vertices. `pairs[i]` are indices
/// into Q (0-based); sampled when absent.
struct GCalSpec {
  int p_size = 1;
  int q_size = 2;
  std::optional<std::vector<std::pair<int, int>>> pairs;
  std::uint64_t seed = 0;
};

/// K_q plus a pendant path u-w with u joined to all clique vertices but one.
struct ThetaSpec {
  int q = 3;
};

/// C_{2k} with a K_p block joined to each consecutive pair (2i, 2i+1).
struct HSpec {
  int k = 2;
  int p = 0;
};

/// P_{3k} x P_2.
struct GridSpec {
  int k = 1;
};

/// complete, empty, cycle, path, star, matching (n = 2t), biclique (a, b).
struct ClassicSpec {
  std::string name = "complete";
  int n = 3;
  int a = 1;
  int b = 1;
};

using FamilySpec =
    std::variant<LambdaSpec, PhiSpec, PsiSpec, OmegaSpec, GCalSpec, ThetaSpec, HSpec, GridSpec, ClassicSpec>;

FamilyTag family_tag(const FamilySpec& spec);

/// Builds a family member. Throws FamilyError on range violations or when the
/// constraints cannot be met (including exhausting the retry cap).
Graph generate(const FamilySpec& spec);

// Frozen example graphs.

enum class Fixture { H1, H2, PsiFig1, OmegaFig3 };

inline constexpr Fixture kAllFixtures[] = {Fixture::H1, Fixture::H2, Fixture::PsiFig1, Fixture::OmegaFig3};

std::string_view fixture_key(Fixture f);
std::optional<Fixture> parse_fixture_key(std::string_view key);
Graph fixture(Fixture f);
/// Throws FamilyError for unknown names.
Graph fixture(std::string_view name);

// Recognizers: true iff g is isomorphic to some member of the family.

bool in_lambda(const Graph& g);
bool in_phi(const Graph& g);
bool in_psi(const Graph& g);

inline constexpr int kOmegaOrderCap = 16;
/// Throws FamilyError above kOmegaOrderCap vertices.
bool in_omega(const Graph& g);
bool in_gcal(const Graph& g);
bool in_theta(const Graph& g);
/// Isomorphism against the (few) members of matching order.
bool in_h_family(const Graph& g);
bool in_grid(const Graph& g);
/// Every component is a star K_{1,t}, t >= 1.
bool is_galaxy(const Graph& g);

/// Dispatch by tag. Classic recognition needs the spec's name; use
/// recognize_classic for that.
bool recognize(const Graph& g, FamilyTag tag);
bool recognize_classic(const Graph& g, std::string_view name);

}  // namespace oidom
