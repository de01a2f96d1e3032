#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "quiverforge/hyperpotential.hpp"

namespace quiverforge {

// Base quiver plus alpha* : t(alpha) -> s(alpha) in degree -1 and a loop t_i
// in degree -2 at every vertex. Base arrows keep their ids; starred arrows
// are named "<id>*" and loops "t_<vertex>".
struct GradedQuiver {
  QuiverPtr base;
  QuiverPtr graded;
  std::vector<int> degree;            // per graded arrow
  std::vector<std::size_t> embed;     // base arrow -> graded arrow
  std::vector<std::size_t> star;      // base arrow -> graded arrow
  std::vector<std::size_t> loop;      // vertex -> graded arrow
};

GradedQuiver make_graded_quiver(const QuiverPtr& q);

int path_degree(const GradedQuiver& g, const Path& p);

// Image of a degree-0 element under the inclusion of the base quiver.
AlgebraElement embed_element(const GradedQuiver& g, const AlgebraElement& x);

struct DgPresentation {
  GradedQuiver quiver;
  Field field = Field::rationals();
  std::size_t trunc = 0;
  std::vector<AlgebraElement> d;  // per graded arrow
};

DgPresentation build_ginzburg(const Hyperpotential& h);

// Leibniz extension: d(xy) = d(x) y + (-1)^{deg x} x d(y).
AlgebraElement apply_d(const DgPresentation& g, const AlgebraElement& x);

struct DSquaredReport {
  bool ok = false;
  // (graded arrow, d(d(arrow))) for every generator with nonzero d^2.
  std::vector<std::pair<std::size_t, AlgebraElement>> failures;
};

DSquaredReport check_d_squared(const DgPresentation& g);

// Phi: Gamma(c rho) -> Gamma(rho), alpha -> alpha, alpha* -> c alpha*, t_i -> c t_i.
struct ScalingMorphism {
  DgPresentation source;
  DgPresentation target;
  std::vector<AlgebraElement> images;  // per graded arrow
  bool commutes = false;               // Phi d = d Phi on every generator
};

ScalingMorphism scaling_isomorphism(const Hyperpotential& h, const Scalar& c);

nlohmann::json presentation_to_json(const DgPresentation& g);
std::string emit_graded_dot(const GradedQuiver& g);

}  // namespace quiverforge
