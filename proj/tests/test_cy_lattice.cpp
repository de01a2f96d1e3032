#include <cstdlib>
#include <random>

#include "doctest.h"
#include "quiverforge/cy_lattice.hpp"
#include "quiverforge/error.hpp"

using namespace quiverforge;

namespace {

// Membership by scanning all combinations a g1 + b g2 with |a|, |b| <= bound.
bool scanned_member(CYPair x, CYPair g1, CYPair g2, long scale, long bound) {
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      if (scale * (a * g1.d + b * g2.d) == x.d && scale * (a * g1.e + b * g2.e) == x.e) return true;
  return false;
}

}  // namespace

TEST_CASE("Hom-finiteness") {
  CHECK(hom_finite({6, 7}, {-2, -3}).determinant == 4);
  CHECK(hom_finite({6, 7}, {-2, -3}).hom_finite);
  CHECK(hom_finite({14, 15}, {4, 4}).determinant == 4);
  CHECK_FALSE(hom_finite({2, 2}, {1, 1}).hom_finite);
  CHECK_THROWS_AS(cy_dimensions({2, 2}, {1, 1}), Error);
  try {
    cy_dimensions({2, 2}, {1, 1});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("orbit category not Hom-finite") != std::string::npos);
  }
}

TEST_CASE("lattice examples") {
  auto c = cy_dimensions({6, 7}, {-2, -3});
  CHECK(c.certificate() == Certificate::L);
  CHECK(c.rank() == 2);
  auto m = member({2, 1}, c);
  CHECK(m.member);
  CHECK(m.coeffs == std::array<long, 2>{1, 2});

  auto g = cy_dimensions({14, 15}, {4, 4});
  CHECK(g.certificate() == Certificate::L);
  auto mg = member({2, 1}, g);
  CHECK(mg.member);
  CHECK(mg.coeffs == std::array<long, 2>{-1, 4});

  auto t = cy_dimensions({2, 2}, {2, 1});
  auto mt = member({0, 1}, t);
  CHECK(mt.member);
  CHECK(mt.coeffs == std::array<long, 2>{1, -1});
  CHECK_FALSE(member({1, 0}, t).member);
  CHECK(member({0, 0}, t).coeffs == std::array<long, 2>{0, 0});
}

TEST_CASE("HNF generates the same lattice") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> u(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    CYPair g1{u(rng), u(rng)}, g2{u(rng), u(rng)};
    if (g1 == CYPair{0, 0}) continue;
    const bool finite = hom_finite(g1, g2).hom_finite;
    CYLattice lat(g1, g2);
    CHECK((lat.rank() == 2) == finite);
    CHECK(lat.determinant() == g1.d * g2.e - g2.d * g1.e);
    for (std::size_t i = 0; i < lat.rank(); ++i) {
      const auto& row = lat.hnf()[i];
      const auto& u_row = lat.transform()[i];
      CHECK(row[0] == u_row[0] * g1.d + u_row[1] * g2.d);
      CHECK(row[1] == u_row[0] * g1.e + u_row[1] * g2.e);
    }
    CHECK(member(g1, lat).member);
    CHECK(member(g2, lat).member);
  }
}

TEST_CASE("membership agrees with a brute-force scan") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> u(-5, 5), x(-8, 8);
  for (int trial = 0; trial < 60; ++trial) {
    CYPair g1{u(rng), u(rng)}, g2{u(rng), u(rng)};
    if (g1 == CYPair{0, 0} || !hom_finite(g1, g2).hom_finite) continue;
    CYLattice lat(g1, g2);
    for (int k = 0; k < 10; ++k) {
      CYPair p{x(rng), x(rng)};
      auto m = member(p, lat);
      CHECK(m.member == scanned_member(p, g1, g2, 1, 90));
      if (m.member) {
        CHECK(m.coeffs[0] * g1.d + m.coeffs[1] * g2.d == p.d);
        CHECK(m.coeffs[0] * g1.e + m.coeffs[1] * g2.e == p.e);
      }
      auto c = member_certified(p, lat);
      const long scale = lat.certificate() == Certificate::L ? 1 : 2;
      CHECK(c.member == scanned_member(p, g1, g2, scale, 90));
      if (c.member) CHECK(m.member);
    }
  }
}

TEST_CASE("parity conditions") {
  auto odd = cy_dimensions({1, 2}, {3, 2});
  CHECK_FALSE(odd.parity_first());
  CHECK(odd.certificate() == Certificate::TwoL);
  CHECK(certificate_name(odd.certificate()) == "2L");
  CHECK(certificate_name(Certificate::L) == "L");
  CHECK(member({4, 4}, odd).member);
  CHECK_FALSE(member_certified({4, 4}, odd).member);
  CHECK(member_certified({8, 8}, odd).member);
}

TEST_CASE("ratio solver") {
  auto c = cy_dimensions({6, 7}, {-2, -3});
  CHECK(solve_ratio(2, c) == CYPair{2, 1});
  CHECK(solve_ratio(0, cy_dimensions({2, 2}, {2, 1})) == CYPair{0, 1});

  for (const mpq_class& r : {mpq_class(1, 2), mpq_class(-3, 4), mpq_class(5), mpq_class(7, 3)}) {
    auto s = solve_ratio(r, c);
    mpq_class ratio(s.d, s.e);
    ratio.canonicalize();
    CHECK(ratio == r);
    CHECK(member_certified(s, c).member);
    // smallest positive e, by scanning
    long expect = 0;
    for (long n = 1; n <= 64 && !expect; ++n) {
      mpq_class d = r * n;
      if (d.get_den() == 1 && scanned_member({d.get_num().get_si(), n}, {6, 7}, {-2, -3}, 1, 200)) expect = n;
    }
    CHECK(s.e == expect);
  }
}

TEST_CASE("Dynkin data") {
  CHECK(dynkin_cy_data("D8").pair == CYPair{6, 7});
  CHECK(dynkin_cy_data("E8").pair == CYPair{14, 15});
  CHECK(dynkin_cy_data("D7").pair == CYPair{10, 12});
  CHECK_FALSE(dynkin_cy_data("D8").extension);
  CHECK(dynkin_cy_data("A3").extension);
  CHECK_THROWS_AS(dynkin_cy_data("F4"), Error);
}
