#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "quiverforge/quiver.hpp"
#include "quiverforge/scalar.hpp"

namespace quiverforge {

using QuiverPtr = std::shared_ptr<const Quiver>;

inline QuiverPtr share(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

// An element of the completed path algebra modulo m^N, where m is the arrow
// ideal and N = trunc(). Only paths of length < N are stored; no stored
// coefficient is zero. Binary operations truncate to the smaller order.
class AlgebraElement {
 public:
  using Terms = std::map<Path, Scalar>;

  AlgebraElement(QuiverPtr quiver, Field field, std::size_t trunc);

  static AlgebraElement path(QuiverPtr quiver, Field field, std::size_t trunc, const Path& p,
                             const Scalar& coeff);
  static AlgebraElement path(QuiverPtr quiver, Field field, std::size_t trunc, const Path& p);
  static AlgebraElement vertex(QuiverPtr quiver, Field field, std::size_t trunc, std::size_t v);
  static AlgebraElement arrow(QuiverPtr quiver, Field field, std::size_t trunc, std::size_t a);
  // Sum of all e_i.
  static AlgebraElement unit(QuiverPtr quiver, Field field, std::size_t trunc);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const Field& field() const { return field_; }
  std::size_t trunc() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds coeff * p; terms of length >= trunc are dropped.
  void add_term(const Path& p, const Scalar& coeff);
  Scalar coefficient(const Path& p) const;

  // Same element at a smaller truncation order.
  AlgebraElement truncated(std::size_t n) const;
  // Projection e_i x e_j onto walks i -> j.
  AlgebraElement block(std::size_t from, std::size_t to) const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  // Literal equality: quiver, field, truncation and canonical terms.
  bool operator==(const AlgebraElement& o) const;

  std::string to_string() const;

 private:
  QuiverPtr quiver_;
  Field field_;
  std::size_t trunc_;
  Terms terms_;
};

// Throws unless a and b live over the same quiver and field.
void check_compatible(const AlgebraElement& a, const AlgebraElement& b);
bool same_quiver(const QuiverPtr& a, const QuiverPtr& b);

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

// sigma(a1...an) = an a1 ... a(n-1) on cycles, sigma(e_i) = e_i, 0 on non-cycles.
AlgebraElement sigma(const AlgebraElement& a);
// Sum of all rotations of each cycle; N(e_i) = 0.
AlgebraElement norm_map(const AlgebraElement& a);
// Cyclic derivative. Every term must be a cycle. Result truncation is trunc-1.
AlgebraElement cyclic_derivative(const AlgebraElement& a, std::size_t arrow);

// Element of the completed tensor square, stored as (left path, right path)
// pairs with |left| + |right| < trunc.
struct Tensor {
  QuiverPtr quiver;
  Field field;
  std::size_t trunc;
  std::map<std::pair<Path, Path>, Scalar> terms;

  void add_term(const Path& left, const Path& right, const Scalar& c);
  bool operator==(const Tensor& o) const {
    return same_quiver(quiver, o.quiver) && field == o.field && trunc == o.trunc && terms == o.terms;
  }
};

// Delta_alpha(a1...an) = sum over j with a_j = alpha of a1..a(j-1) (x) a(j+1)..an.
Tensor double_derivation(const AlgebraElement& a, std::size_t arrow);
// (a (x) b) <> y = b y a, extended bilinearly.
AlgebraElement diamond(const Tensor& t, const AlgebraElement& y);

// Continuous algebra map K<<Q>> -> K<<Q'>> fixing vertices (matched by id).
// Images must be supported on walks s(alpha) -> t(alpha) and have no constant
// term, which makes the map continuous and well defined modulo m^N.
class Substitution {
 public:
  Substitution(QuiverPtr source, QuiverPtr target, std::vector<AlgebraElement> images);

  static Substitution identity(QuiverPtr q, Field field, std::size_t trunc);

  const QuiverPtr& source() const { return source_; }
  const QuiverPtr& target() const { return target_; }
  const Field& field() const { return field_; }
  std::size_t trunc() const { return trunc_; }
  const AlgebraElement& image(std::size_t arrow) const { return images_.at(arrow); }
  const std::vector<AlgebraElement>& images() const { return images_; }
  // Target vertex index for a source vertex index.
  std::size_t map_vertex(std::size_t v) const { return vertex_map_.at(v); }

  // Linear part (degree-one coefficients) is an invertible square matrix.
  bool linear_part_invertible() const;

 private:
  QuiverPtr source_, target_;
  Field field_;
  std::size_t trunc_;
  std::vector<AlgebraElement> images_;
  std::vector<std::size_t> vertex_map_;
};

AlgebraElement apply_substitution(const Substitution& phi, const AlgebraElement& a);
// (outer o inner)(alpha) = outer(inner(alpha)).
Substitution compose(const Substitution& outer, const Substitution& inner);

}  // namespace quiverforge
