#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quiverforge/hyperpotential.hpp"

namespace quiverforge {

// Basis of one graded piece (path length `degree`).
struct GradedSubspaceBasis {
  std::size_t degree = 0;
  Field field = Field::rationals();
  std::vector<AlgebraElement> basis;
};

// Cycles of length d, sorted. For d = 0 these are the trivial paths.
std::vector<Path> cycles_of_degree(const Quiver& q, std::size_t d);

// Degree-d part of coker(id - sigma): one lex-minimal representative per
// rotation class.
GradedSubspaceBasis hh0_basis(const QuiverPtr& q, const Field& field, std::size_t d);

struct HH1Basis {
  std::size_t degree = 0;
  Field field = Field::rationals();
  std::vector<AlgebraElement> basis;
  // (rho_alpha) with sum_alpha alpha rho_alpha equal to the basis vector.
  std::vector<Hyperpotential> forms;
};

// Degree-d part of ker(id - sigma) on A_+, d >= 1: orbit sums of rotation classes.
HH1Basis hh1_basis(const QuiverPtr& q, const Field& field, std::size_t d);

// Connes' map on a cycle class: rho_alpha = cyclic derivative of w.
Hyperpotential connes_B(const AlgebraElement& w);

struct BPreimage {
  bool in_image = false;
  std::optional<AlgebraElement> preimage;
};

// Solves B(x) = h over the degree-d cycle-class space; h must be homogeneous
// and sigma-invariant.
BPreimage in_image_of_B(const AlgebraElement& h);
BPreimage in_image_of_B(const Hyperpotential& h);

struct DegreeRow {
  std::size_t degree = 0;
  std::size_t cycles = 0;  // dimension of the degree-d cycle space
  std::size_t hh0 = 0;
  std::size_t hh1 = 0;
  std::size_t b_rank = 0;
};

// Ranks by Gaussian elimination of id - sigma and of the norm map.
DegreeRow hochschild_degree(const Quiver& q, const Field& field, std::size_t d);

}  // namespace quiverforge
