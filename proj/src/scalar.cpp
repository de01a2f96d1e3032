#include "quiverforge/scalar.hpp"

#include <charconv>

#include "quiverforge/error.hpp"

namespace quiverforge {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error("malformed integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error("GF(" + std::to_string(p) + "): modulus is not prime");
  if (p >= (std::uint64_t{1} << 62)) throw Error("GF(p): modulus too large");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.starts_with("GF(") && text.ends_with(")"))
    return prime(parse_u64(text.substr(3, text.size() - 4)));
  if (text.starts_with("GF:")) return prime(parse_u64(text.substr(3)));
  throw Error("unknown field '" + std::string(text) + "' (expected Q, GF(p) or GF:p)");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(const Field& f, long v) : field_(f) {
  if (f.is_rational())
    value_ = mpq_class(v);
  else
    value_ = reduce_mpz(mpz_class(v), f.characteristic());
}

Scalar::Scalar(const Field& f, const mpq_class& v) : field_(f) {
  if (f.is_rational()) {
    mpq_class c = v;
    c.canonicalize();
    value_ = c;
    return;
  }
  const std::uint64_t p = f.characteristic();
  const std::uint64_t den = reduce_mpz(v.get_den(), p);
  if (den == 0) throw Error("denominator divisible by the characteristic " + std::to_string(p));
  value_ = mulmod(reduce_mpz(v.get_num(), p), powmod(den, p - 2, p), p);
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw Error("malformed scalar '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Scalar(f, q);
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error("mixed-field arithmetic: " + field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    std::get<mpq_class>(r.value_) = -std::get<mpq_class>(value_);
  } else {
    const auto v = std::get<std::uint64_t>(value_);
    std::get<std::uint64_t>(r.value_) = v == 0 ? 0 : field_.characteristic() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    const auto p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + std::get<std::uint64_t>(o.value_)) % p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = mulmod(v, std::get<std::uint64_t>(o.value_), field_.characteristic());
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero in " + field_.name());
  Scalar r = *this;
  if (field_.is_rational()) {
    std::get<mpq_class>(r.value_) = 1 / std::get<mpq_class>(value_);
  } else {
    const auto p = field_.characteristic();
    std::get<std::uint64_t>(r.value_) = powmod(std::get<std::uint64_t>(value_), p - 2, p);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && value_ == o.value_;
}

mpq_class Scalar::rational() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_);
  return mpq_class(mpz_class(std::to_string(std::get<std::uint64_t>(value_))));
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error("residue() on a rational scalar");
  return std::get<std::uint64_t>(value_);
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace quiverforge
