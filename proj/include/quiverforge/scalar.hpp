#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace quiverforge {

// Coefficient field: the rationals or GF(p) for a prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  // Accepts "Q", "GF(p)" and "GF:p".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  // 0 for Q.
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

// Exact element of Q or GF(p). Mixed-field arithmetic throws.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}
  Scalar(const Field& f, long v);
  Scalar(const Field& f, const mpq_class& v);

  // "num/den", "num" (or a residue for GF(p); fractions are inverted mod p).
  static Scalar parse(const Field& f, std::string_view text);

  static Scalar zero(const Field& f) { return Scalar(f, 0L); }
  static Scalar one(const Field& f) { return Scalar(f, 1L); }

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;

  // Rational value; for GF(p) the residue in [0, p).
  mpq_class rational() const;
  std::uint64_t residue() const;

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace quiverforge
