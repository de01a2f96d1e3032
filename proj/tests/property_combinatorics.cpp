#include <numeric>
#include <random>

#include "doctest.h"
#include "quiverforge/cluster_rank2.hpp"
#include "quiverforge/cy_lattice.hpp"
#include "quiverforge/error.hpp"

using namespace quiverforge;

TEST_CASE("ratio solutions are certified and minimal") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> u(-7, 7), num(-6, 6), den(1, 4);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    CYPair g1{u(rng), u(rng)}, g2{u(rng), u(rng)};
    if (g1 == CYPair{0, 0} || !hom_finite(g1, g2).hom_finite) continue;
    const CYLattice lat = cy_dimensions(g1, g2);
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    const CYPair s = solve_ratio(r, lat);
    CHECK(s.e > 0);
    CHECK(mpq_class(s.d) == r * s.e);
    CHECK(member_certified(s, lat).member);
    for (long n = 1; n < s.e; ++n) {
      const mpq_class d = r * n;
      if (d.get_den() == 1) CHECK_FALSE(member_certified({d.get_num().get_si(), n}, lat).member);
    }
    ++solved;
  }
  CHECK(solved > 200);
}

TEST_CASE("the certified set sits inside the lattice") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> u(-9, 9);
  for (int trial = 0; trial < 400; ++trial) {
    CYPair g1{u(rng), u(rng)}, g2{u(rng), u(rng)};
    if (g1 == CYPair{0, 0} || !hom_finite(g1, g2).hom_finite) continue;
    const CYLattice lat(g1, g2);
    CYPair p{u(rng) * 2, u(rng) * 2};
    if (member_certified(p, lat).member) CHECK(member(p, lat).member);
    CHECK(member({2 * g1.d, 2 * g1.e}, lat).member);
    CHECK(member_certified({2 * g1.d - 2 * g2.d, 2 * g1.e - 2 * g2.e}, lat).member);
    CHECK(std::labs(lat.determinant()) == std::labs(hom_finite(g1, g2).determinant));
  }
}

TEST_CASE("mutation is an involution on random skew-symmetrizable seeds") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> du(1, 3), ku(-2, 2);
  const std::vector<std::string> names{"x", "y", "z"};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    std::vector<long> d(n);
    for (auto& v : d) v = du(rng);
    std::vector<std::vector<long>> b(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const long s = ku(rng) * std::lcm(d[i], d[j]);
        b[i][j] = s / d[i];
        b[j][i] = -s / d[j];
      }
    auto seed = initial_seed(b, std::vector<std::string>(names.begin(), names.begin() + n));
    for (auto conv : {ExchangeConvention::Row, ExchangeConvention::Column})
      for (std::size_t k = 0; k < n; ++k) {
        auto once = mutate(seed, k, conv);
        CHECK(mutate(once, k, conv) == seed);
        CHECK_NOTHROW(skew_symmetrizer(once.b));
        CHECK(laurent_check(once.vars[k]));
      }
  }
}

TEST_CASE("rank two finite types") {
  const std::vector<std::string> xy{"x", "y"};
  for (auto [b, c, count] : {std::tuple{0L, 0L, 4u}, {1L, 1L, 5u}, {1L, 2L, 6u}, {2L, 1L, 6u}, {1L, 3L, 8u}, {3L, 1L, 8u}})
    for (auto conv : {ExchangeConvention::Row, ExchangeConvention::Column}) {
      auto closure = enumerate_variables(initial_seed({{0, b}, {-c, 0}}, xy), conv);
      CHECK(closure.variables.size() == count);
      CHECK(closure.clusters.size() == count);
      for (const auto& v : closure.variables) CHECK(positive_laurent(v));
    }
}
