#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quiverforge/path_algebra.hpp"

namespace quiverforge {

// Lexicographically smallest rotation of a nontrivial cycle.
Path canonical_rotation(const Quiver& q, const Path& cycle);

// A potential: linear combination of nontrivial cycles, each term stored as its
// lexicographically minimal rotation (cyclically equivalent terms merge).
class Potential {
 public:
  explicit Potential(const AlgebraElement& w);
  const AlgebraElement& element() const { return w_; }
  bool operator==(const Potential&) const = default;

 private:
  AlgebraElement w_;
};

// A family (rho_alpha) indexed by arrows, with rho_alpha supported on walks
// t(alpha) -> s(alpha). Condition sum [alpha, rho_alpha] = 0 is checked
// separately by check_hyperpotential, modulo m^trunc.
class Hyperpotential {
 public:
  // Every rho is truncated to `trunc`; rho with a smaller truncation order is
  // rejected. Throws on block violations.
  Hyperpotential(QuiverPtr quiver, Field field, std::size_t trunc, std::vector<AlgebraElement> rho);

  static Hyperpotential zero(QuiverPtr quiver, Field field, std::size_t trunc);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const Field& field() const { return field_; }
  std::size_t trunc() const { return trunc_; }
  const AlgebraElement& rho(std::size_t arrow) const { return rho_.at(arrow); }
  const std::vector<AlgebraElement>& rhos() const { return rho_; }

  Hyperpotential scaled(const Scalar& c) const;
  Hyperpotential truncated(std::size_t n) const;
  // sum_alpha alpha * rho_alpha (a sigma-invariant element when valid).
  AlgebraElement cycle_sum() const;

  bool operator==(const Hyperpotential& o) const;

 private:
  QuiverPtr quiver_;
  Field field_;
  std::size_t trunc_;
  std::vector<AlgebraElement> rho_;
};

struct HyperpotentialReport {
  bool ok = false;
  // The commutator sum vanishes modulo m^verified_mod.
  std::size_t verified_mod = 0;
  // sum_alpha [alpha, rho_alpha]; zero iff ok.
  AlgebraElement residual;
  // Nonzero vertex blocks e_i residual e_i.
  std::vector<std::pair<std::size_t, AlgebraElement>> blocks;
};

HyperpotentialReport check_hyperpotential(const Hyperpotential& h);

// Reads (rho_alpha) off x = sum_alpha alpha rho_alpha; x must be supported on
// nontrivial cycles.
Hyperpotential hyperpotential_from_cycle_sum(const AlgebraElement& x);

// rho_alpha = cyclic derivative of W with respect to alpha.
Hyperpotential from_potential(const Potential& w);

// rho'_beta = sum_alpha Delta_beta(phi(alpha)) <> phi(rho_alpha).
Hyperpotential transport(const Substitution& phi, const Hyperpotential& h);

// transport(phi, h) == h' modulo the smaller truncation order of the two.
// Throws if the linear part of phi is not invertible.
bool verify_right_equivalence(const Substitution& phi, const Hyperpotential& h, const Hyperpotential& h2);
bool verify_weak_right_equivalence(const Substitution& phi, const Scalar& c, const Hyperpotential& h,
                                   const Hyperpotential& h2);

}  // namespace quiverforge
