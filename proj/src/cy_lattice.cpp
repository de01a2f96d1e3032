#include "quiverforge/cy_lattice.hpp"

#include <charconv>

#include "quiverforge/error.hpp"

namespace quiverforge {

namespace {

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error("lattice arithmetic overflow");
  return z.get_si();
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HomFiniteResult hom_finite(CYPair g1, CYPair g2) {
  if (g1.d == 0 && g1.e == 0) throw Error("first generator must be nonzero");
  const long det = to_long(mpz_class(g1.e) * g2.d - mpz_class(g2.e) * g1.d);
  return {det, det != 0};
}

CYLattice::CYLattice(CYPair g1, CYPair g2) : g1_(g1), g2_(g2) {
  det_ = to_long(mpz_class(g1.d) * g2.e - mpz_class(g2.d) * g1.e);
  using Row = std::array<mpz_class, 4>;  // two lattice coordinates, two transform entries
  std::array<Row, 2> m{Row{g1.d, g1.e, 1, 0}, Row{g2.d, g2.e, 0, 1}};
  auto sub = [](Row& a, const Row& b, const mpz_class& q) {
    for (int k = 0; k < 4; ++k) a[k] -= q * b[k];
  };
  std::size_t pr = 0;
  for (int col = 0; col < 2 && pr < 2; ++col) {
    for (std::size_t i = pr + 1; i < 2; ++i) {
      while (m[i][col] != 0) {
        sub(m[pr], m[i], m[pr][col] / m[i][col]);
        std::swap(m[pr], m[i]);
      }
    }
    if (m[pr][col] == 0) continue;
    if (m[pr][col] < 0)
      for (auto& x : m[pr]) x = -x;
    for (std::size_t k = 0; k < pr; ++k) sub(m[k], m[pr], floor_div(m[k][col], m[pr][col]));
    ++pr;
  }
  for (std::size_t i = 0; i < pr; ++i) {
    hnf_.push_back({to_long(m[i][0]), to_long(m[i][1])});
    transform_.push_back({to_long(m[i][2]), to_long(m[i][3])});
  }
}

bool CYLattice::parity_first() const { return g2_.d % 2 == 0 || g2_.e % 2 != 0; }

bool CYLattice::parity_second() const {
  return (g1_.d - g2_.d) % 2 == 0 || (g1_.e - g2_.e) % 2 != 0;
}

CYLattice cy_dimensions(CYPair g1, CYPair g2) {
  if (!hom_finite(g1, g2).hom_finite) throw Error("orbit category not Hom-finite (e1 d2 - e2 d1 = 0)");
  return CYLattice(g1, g2);
}

Membership member(CYPair x, const CYLattice& lat) {
  std::array<mpz_class, 2> r{x.d, x.e};
  std::array<mpz_class, 2> coeffs{0, 0};
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    const auto& h = lat.hnf()[i];
    const int col = h[0] != 0 ? 0 : 1;
    if (r[col] % h[col] != 0) return {false, {0, 0}};
    const mpz_class k = r[col] / h[col];
    r[0] -= k * h[0];
    r[1] -= k * h[1];
    coeffs[0] += k * lat.transform()[i][0];
    coeffs[1] += k * lat.transform()[i][1];
  }
  if (r[0] != 0 || r[1] != 0) return {false, {0, 0}};
  return {true, {to_long(coeffs[0]), to_long(coeffs[1])}};
}

Membership member_certified(CYPair x, const CYLattice& lat) {
  if (lat.certificate() == Certificate::L) return member(x, lat);
  if (x.d % 2 != 0 || x.e % 2 != 0) return {false, {0, 0}};
  return member({x.d / 2, x.e / 2}, lat);
}

CYPair solve_ratio(const mpq_class& r, const CYLattice& lat) {
  if (lat.rank() < 2) throw Error("solve_ratio needs a lattice of rank 2");
  const CYPair g1 = lat.generator(0), g2 = lat.generator(1);
  const mpq_class det(lat.determinant());
  mpq_class s1 = (r * g2.e - g2.d) / det;
  mpq_class s2 = (mpq_class(g1.d) - r * g1.e) / det;
  if (lat.certificate() == Certificate::TwoL) {
    s1 /= 2;
    s2 /= 2;
  }
  s1.canonicalize();
  s2.canonicalize();
  mpz_class n;
  mpz_lcm(n.get_mpz_t(), s1.get_den_mpz_t(), s2.get_den_mpz_t());
  mpq_class d = r * n;
  d.canonicalize();
  if (d.get_den() != 1) throw InternalError("solve_ratio: non-integral answer");
  CYPair out{to_long(d.get_num()), to_long(n)};
  if (!member_certified(out, lat).member) throw InternalError("solve_ratio: answer not in the certified set");
  return out;
}

DynkinCY dynkin_cy_data(std::string_view diagram) {
  if (diagram.size() < 2) throw Error("unsupported diagram '" + std::string(diagram) + "'");
  const char kind = diagram[0];
  long n = 0;
  auto [ptr, ec] = std::from_chars(diagram.data() + 1, diagram.data() + diagram.size(), n);
  if (ec != std::errc() || ptr != diagram.data() + diagram.size() || n < 1)
    throw Error("unsupported diagram '" + std::string(diagram) + "'");
  switch (kind) {
    case 'A':
      return {{n - 1, n + 1}, true};
    case 'D':
      if (n < 3) break;
      if (n % 2 == 0) return {{n - 2, n - 1}, false};
      return {{2 * n - 4, 2 * n - 2}, false};
    case 'E':
      if (n == 8) return {{14, 15}, false};
      if (n == 7) return {{8, 9}, true};
      if (n == 6) return {{10, 12}, true};
      break;
    default:
      break;
  }
  throw Error("unsupported diagram '" + std::string(diagram) + "'");
}

std::string certificate_name(Certificate c) { return c == Certificate::L ? "L" : "2L"; }

}  // namespace quiverforge
