#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quiverforge/mesh_category.hpp"

namespace quiverforge {

using Monomial = std::vector<unsigned>;

// Graded-lex order: total degree first, then exponents lexicographically.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Polynomial with integer coefficients in a fixed number of variables.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, mpz_class, GradedLex>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const mpz_class& c);
  static MultiPoly variable(std::size_t nvars, std::size_t k);
  static MultiPoly monomial(const Monomial& m, const mpz_class& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  void add_term(const Monomial& m, const mpz_class& c);
  // Leading term under graded-lex.
  const std::pair<const Monomial, mpz_class>& leading() const;
  unsigned degree_in(std::size_t var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const mpz_class& c);
  MultiPoly pow(unsigned k) const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

// Exact quotient; throws InternalError when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
// Greatest common divisor with positive leading coefficient (0 for 0, 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// Reduced fraction; the denominator has positive leading coefficient.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t nvars = 0);
  RationalFunction(MultiPoly num, MultiPoly den);
  static RationalFunction variable(std::size_t nvars, std::size_t k);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction pow(unsigned k) const;
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator<(const RationalFunction& o) const;

  // "(num)/den" with implicit multiplication, e.g. "(x^3+y+1)/(xy)".
  std::string to_string(const std::vector<std::string>& names) const;
  // Same value, numerator grouped by powers of the first variable with
  // coefficients (v+1)^k kept factored, e.g. "(x^3+(y+1)^2)/(x^2y)".
  std::string display(const std::vector<std::string>& names) const;

 private:
  MultiPoly num_, den_;
};

// Parses expressions with + - * / ^, parentheses and implicit multiplication
// ("x^3y", "3x"), over the given variable names.
RationalFunction parse_rational_function(std::string_view text, const std::vector<std::string>& names);

// True iff the reduced denominator is a monomial with coefficient 1.
bool laurent_check(const RationalFunction& v);
// Laurent polynomial with nonnegative numerator coefficients.
bool positive_laurent(const RationalFunction& v);

// Exchange relation exponents are read from row k of B (b_ki) or from
// column k (b_ik).
enum class ExchangeConvention { Row, Column };

struct ClusterSeed {
  std::vector<std::vector<long>> b;
  std::vector<RationalFunction> vars;
  bool operator==(const ClusterSeed&) const = default;
};

// Positive integers d with d_i b_ij = -d_j b_ji, or throws.
std::vector<long> skew_symmetrizer(const std::vector<std::vector<long>>& b);

ClusterSeed initial_seed(const std::vector<std::vector<long>>& b, const std::vector<std::string>& names);
// k is 0-based.
ClusterSeed mutate(const ClusterSeed& s, std::size_t k, ExchangeConvention conv = ExchangeConvention::Row);

struct ClusterClosure {
  std::vector<RationalFunction> variables;           // sorted
  std::vector<std::vector<std::size_t>> clusters;    // indices into variables, sorted
  Graph exchange;                                    // on clusters
};

// Breadth-first closure under all mutations; clusters are compared as sets.
ClusterClosure enumerate_variables(const ClusterSeed& s, ExchangeConvention conv = ExchangeConvention::Row,
                                   std::size_t cap = 10000);

// Rank 2: variables in order of first appearance along mu_1, mu_2, mu_1, ...
// starting from s, until the cluster of s comes back.
std::vector<RationalFunction> mutation_order_variables(const ClusterSeed& s,
                                                       ExchangeConvention conv = ExchangeConvention::Row,
                                                       std::size_t cap = 10000);

Graph exchange_pattern(const ClusterSeed& s, ExchangeConvention conv = ExchangeConvention::Row);

std::vector<std::vector<long>> g2_exchange_matrix();
std::vector<std::vector<long>> a2_exchange_matrix();

}  // namespace quiverforge
