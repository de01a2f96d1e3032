#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "json.hpp"
#include "quiverforge/hyperpotential.hpp"

namespace quiverforge {

// Dimensions of A / (I + m^d) for d = 0..max_degree, where I is the closed
// two-sided ideal generated by a list of relations.
struct QuotientBasis {
  QuiverPtr quiver;
  Field field = Field::rationals();
  std::size_t trunc = 0;
  std::vector<std::size_t> dims;
  // Basis paths of A / (I + m^d) for every computed d (shortest paths kept).
  std::vector<std::vector<Path>> basis;
  bool stabilized = false;
  std::optional<std::size_t> stable_degree;
  std::optional<std::size_t> dimension;

  // Basis at the stable degree, or at the largest computed degree otherwise.
  const std::vector<Path>& final_basis() const;
};

// Relations are taken modulo their own truncation order, so degrees above the
// smallest relation truncation are not computed. N >= 2.
QuotientBasis quotient_dimensions(const QuiverPtr& q, const Field& field, const std::vector<AlgebraElement>& relations,
                                  std::size_t N);

QuotientBasis jacobian_dimensions(const Hyperpotential& h, std::size_t N);

// Cycle quiver Q_m with arrows a_i : i -> i+1.
QuiverPtr lambda_quiver(std::size_t m);
// Monomial presentation: Q_m modulo all paths of length me-1.
QuotientBasis lambda_algebra(std::size_t m, std::size_t e, const Field& field);
// rho_{a_i} = the path of length me-1 from i+1 to i, known modulo m^trunc.
Hyperpotential lambda_hyperpotential(std::size_t m, std::size_t e, const Field& field, std::size_t trunc);
// (a_1 ... a_m)^e, known modulo m^trunc.
Potential lambda_potential(std::size_t m, std::size_t e, const Field& field, std::size_t trunc);

enum class CycleVerdict { Infinite, Lambda };

struct CyclePotentialAnalysis {
  std::size_t m = 0;
  std::vector<Scalar> coefficients;  // a_k of x^k
  std::vector<Scalar> derivative;    // coefficient of x^k in P'
  CycleVerdict verdict = CycleVerdict::Infinite;
  std::size_t d = 0;                 // meaningful for Lambda
};

// P is exact when known_below is empty; otherwise only a_k with k < known_below
// are known.
CyclePotentialAnalysis analyze_cycle_potential(std::size_t m, const std::vector<Scalar>& coefficients,
                                               const Field& field,
                                               std::optional<std::size_t> known_below = std::nullopt);

struct CycleSeries {
  std::vector<Scalar> coefficients;
  std::size_t known_below = 0;
};

// Writes a potential on Q_m as P(omega) with omega = a_1 ... a_m up to rotation.
CycleSeries cycle_series(const Potential& w);

QuiverPtr g2_quiver();
// 1 -> 2 via a, loop b at 2, relation b^3.
QuotientBasis g2_algebra(const Field& field);
// rho_b = b^3, rho_a = 0.
Hyperpotential g2_hyperpotential(const Field& field, std::size_t trunc);

nlohmann::json quotient_to_json(const QuotientBasis& b);

}  // namespace quiverforge
