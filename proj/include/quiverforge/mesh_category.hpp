#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "quiverforge/linalg.hpp"

namespace quiverforge {

// Simply-laced Dynkin diagram with a fixed bipartite orientation. Color 0
// vertices are sources, color 1 vertices sinks; the branch vertex of D and E
// is a source.
//   A_n: chain 0 - 1 - ... - (n-1)
//   D_n: chain 0 - ... - (n-3), leaves n-2 and n-1 attached to n-3 (D_3 = A_3)
//   E_n: chain 0 - ... - (n-2), leaf n-1 attached to 2
struct Dynkin {
  char kind = 'A';
  int n = 0;
  std::vector<std::vector<int>> neighbors;
  std::vector<int> color;
  std::vector<int> phi;  // order-two diagram automorphism (identity if none)
  std::vector<int> row;  // display row

  std::string name() const;
  int coxeter() const;
  int positive_roots() const { return n * coxeter() / 2; }
};

Dynkin make_dynkin(char kind, int n);
// "A3", "D8", "E8", ...
Dynkin parse_dynkin(std::string_view name);

struct Vertex {
  int p = 0;
  int i = 0;
  auto operator<=>(const Vertex&) const = default;
};

std::string vertex_to_string(const Vertex& v);

// Z Delta: arrows (p,i) -> (p,j) for sources i, (p,j) -> (p+1,i) for sinks j;
// tau(p,i) = (p-1,i).
int column(const Dynkin& dyn, const Vertex& v);
std::vector<Vertex> predecessors(const Dynkin& dyn, const Vertex& v);
std::vector<Vertex> successors(const Dynkin& dyn, const Vertex& v);
inline Vertex tau(const Vertex& v) { return {v.p - 1, v.i}; }

// Hom(X, -) on the mesh category of Z Delta for slices p <= p_max, computed
// vertex by vertex over Q. Hom(X,V) is the quotient of the direct sum of
// Hom(X,E) over arrows E -> V by the image of Hom(X, tau V) under the mesh.
class HomFunctor {
 public:
  HomFunctor(const Dynkin& dyn, Vertex x, int p_max);

  const Vertex& source() const { return x_; }
  int p_max() const { return p_max_; }
  // Throws when v lies beyond the window.
  std::size_t dim(const Vertex& v) const;
  // Path (as vertex sequence from X) representing basis element k at v.
  const std::vector<Vertex>& representative(const Vertex& v, std::size_t k) const;
  // Coordinates after composing with the arrow u -> v.
  SparseVec push(const SparseVec& coords, const Vertex& u, const Vertex& v) const;
  // Coordinates after composing with a path given by its vertex sequence.
  std::optional<SparseVec> push_along(const SparseVec& coords, const std::vector<Vertex>& path) const;
  // Hom(X, -) vanishes on the whole slice p.
  bool slice_zero(int p) const;
  // Vertices with nonzero Hom, in column order.
  std::vector<Vertex> support() const;

 private:
  struct Node {
    std::size_t dim = 0;
    std::vector<std::pair<Vertex, std::size_t>> blocks;  // predecessor, offset
    std::size_t sdim = 0;
    std::unique_ptr<Echelon> relations;
    std::map<std::size_t, std::size_t> basis_of_column;
    std::vector<std::vector<Vertex>> reps;
  };
  const Node* node(const Vertex& v) const;

  const Dynkin* dyn_;
  Vertex x_;
  int p_max_;
  std::map<Vertex, Node> nodes_;
};

struct HomResult {
  std::size_t dim = 0;
  std::vector<std::vector<Vertex>> basis;  // path representatives
};

// Gaussian elimination on the mesh category of Z Delta.
HomResult hom_dim_universal(const Dynkin& dyn, const Vertex& x, const Vertex& y);
// Hammock propagation: h(X) = 1, h(V) = max(0, sum_{E -> V} h(E) - h(tau V)).
std::size_t knitting_hom_dim(const Dynkin& dyn, const Vertex& x, const Vertex& y);
// Both of the above; throws InternalError when they disagree.
std::size_t hom_dim_checked(const Dynkin& dyn, const Vertex& x, const Vertex& y);

// Orbit quotient Z Delta / <g> with g = tau^a phi^b, acting by
// (p,i) -> (p-a, phi^b(i)). Canonical representatives have p in [0, a).
struct OrbitSpec {
  Dynkin dyn;
  int a = 1;
  int b = 0;

  Vertex act(const Vertex& v, long k) const;  // g^k
  Vertex canonical(const Vertex& v) const;
  std::vector<Vertex> vertices() const;
  std::size_t vertex_count() const { return static_cast<std::size_t>(a) * dyn.n; }
};

// Accepts "tau^4", "phi*tau^4" (a=4, b=1), "(phi*tau)^4" (a=4, b=4 mod 2),
// "tau", "phi*tau".
OrbitSpec parse_orbit_spec(std::string_view diagram, std::string_view generator);
// C_{m,e}: Z D_{me} / <(phi tau)^m>.
OrbitSpec cluster_orbit_spec(int m, int e);
// Z E_8 / <tau^4>.
OrbitSpec g2_orbit_spec();

std::size_t stmod_count(std::size_t m, std::size_t e);

struct Winding {
  long k = 0;    // lift g^k of the canonical target
  Vertex lift;
  std::size_t dim = 0;
};

struct HomSpace {
  Vertex source, target;
  std::vector<Winding> windings;  // nonzero contributions only
  std::size_t total = 0;
};

class OrbitCategory {
 public:
  // Computes Hom(X~, -) for every canonical X, growing the window until the
  // last slice vanishes. Throws "not Hom-finite" past the cap.
  explicit OrbitCategory(OrbitSpec spec, int jobs = 1);

  const OrbitSpec& spec() const { return spec_; }
  std::vector<Vertex> vertices() const { return spec_.vertices(); }
  Vertex tau_of(const Vertex& v) const { return spec_.canonical(tau(v)); }
  int window() const { return window_; }

  const HomFunctor& functor(const Vertex& x) const;
  HomSpace hom(const Vertex& x, const Vertex& y) const;
  std::size_t hom_dim(const Vertex& x, const Vertex& y) const { return hom(x, y).total; }

 private:
  OrbitSpec spec_;
  int window_ = 0;
  std::map<Vertex, std::unique_ptr<HomFunctor>> functors_;
};

std::vector<Vertex> rigid_indecomposables(const OrbitCategory& c);
bool compatible(const OrbitCategory& c, const Vertex& u, const Vertex& v);
// Maximal pairwise compatible sets of rigid indecomposables, sorted.
std::vector<std::vector<Vertex>> cluster_tilting_objects(const OrbitCategory& c);
// T rigid and every Z with Hom(T, tau Z) = 0 lies in T.
bool is_cluster_tilting(const OrbitCategory& c, const std::vector<Vertex>& t);

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
};

// Joins sets differing in exactly one element.
Graph exchange_graph(const std::vector<std::vector<Vertex>>& sets);
bool is_cycle_graph(const Graph& g);

struct EndBasisElement {
  std::size_t from = 0, to = 0;  // summand indices
  Vertex lift;                   // lift of the target summand
  std::size_t index = 0;         // basis index in Hom(T~_from, lift)
  std::vector<Vertex> path;
};

struct GabrielArrow {
  std::size_t from = 0, to = 0, count = 0;
  auto operator<=>(const GabrielArrow&) const = default;
};

struct EndAlgebra {
  std::vector<Vertex> summands;
  Field field = Field::rationals();
  std::vector<EndBasisElement> basis;
  // mult[a][b] = a followed by b (nonzero only when to(a) == from(b)).
  std::vector<std::vector<SparseVec>> mult;
  std::vector<std::size_t> identity;    // basis index of id_{T_i}
  std::vector<std::size_t> rad_dims;    // dim rad^k for k = 1, 2, ... until 0
  std::vector<GabrielArrow> gabriel;
  // Basis indices of chosen irreducible maps, one per Gabriel arrow copy.
  std::vector<std::size_t> irreducibles;

  std::size_t dimension() const { return basis.size(); }
  // Product of basis elements, left to right.
  SparseVec product(const std::vector<std::size_t>& factors) const;
};

EndAlgebra endomorphism_algebra(const OrbitCategory& c, const std::vector<Vertex>& t, const Field& field);

// Gabriel quiver an m-cycle, products of me-1 consecutive irreducibles vanish,
// products of me-2 do not, and dim = m(me-1): then End is Lambda_{m,e}.
bool matches_lambda(const EndAlgebra& a, std::size_t m, std::size_t e);
// One arrow between the two summands, one loop b with b^3 = 0, dim 7.
bool matches_g2(const EndAlgebra& a);

struct G2Data {
  Vertex x, y;
  std::vector<Vertex> rigid;
};

// X and Y representatives of the two tau-orbits of rigid objects: End(X) = K,
// the loop sits at Y, and X + Y is cluster-tilting. X is the smallest
// canonical vertex of its orbit.
G2Data find_g2_pair(const OrbitCategory& c);

// Display row and column of a canonical vertex.
std::pair<int, int> display_position(const Dynkin& dyn, const Vertex& v);

// DOT rendering with tau-orbits as rows. `marks` maps a vertex to a short tag.
std::string emit_ar_quiver_dot(const OrbitSpec& spec, const std::map<Vertex, std::string>& marks);
// Window of Z Delta, slices [p_min, p_max].
std::string emit_window_dot(const Dynkin& dyn, int p_min, int p_max);

nlohmann::json vertex_to_json(const Vertex& v);

}  // namespace quiverforge
