#include "doctest.h"
#include "generators.hpp"
#include "quiverforge/jacobian.hpp"

using namespace testing;

TEST_CASE("commutator identity on random block pairs") {
  std::mt19937_64 rng(20240601);
  const std::vector<QuiverPtr> quivers{q4(), loop()};
  const std::vector<Field> fields{kQ, kGF2, kGF3};
  int checked = 0;
  for (int k = 0; k < 500; ++k) {
    const QuiverPtr& q = quivers[k % 2];
    const Field& f = fields[(k / 2) % 3];
    const std::size_t n = 3 + rng() % 6;
    auto [x, y] = random_block_pair(rng, q, f, n);
    CAPTURE(k);
    CHECK(commutator_identity_holds(x, y));
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("d squared vanishes exactly for hyperpotentials") {
  std::mt19937_64 rng(77);
  const std::vector<QuiverPtr> quivers{q4(), three_cycle(), two_cycle(), two_loops(), arrow_and_loop()};
  const std::vector<Field> fields{kQ, kGF2, kGF3};
  int invalid = 0;
  for (int k = 0; k < 200; ++k) {
    const QuiverPtr& q = quivers[k % quivers.size()];
    const Field& f = fields[k % 3];
    const std::size_t n = 4 + rng() % 4;
    Hyperpotential h = random_valid_family(rng, q, f, n);
    if (k % 2 == 0) {
      CHECK(check_hyperpotential(h).ok);
      CHECK(check_d_squared(build_ginzburg(h)).ok);
    } else {
      h = perturbed(rng, h);
      if (!check_hyperpotential(h).ok) ++invalid;
    }
    CAPTURE(k);
    CHECK(d_squared_matches(h));
  }
  CHECK(invalid >= 40);
}

TEST_CASE("chain rule for random potentials and substitutions") {
  std::mt19937_64 rng(4242);
  const std::vector<QuiverPtr> quivers{loop(), two_cycle(), two_loops(), three_cycle()};
  const std::vector<Field> fields{kQ, kGF2, kGF3, kGF5};
  for (int k = 0; k < 200; ++k) {
    const QuiverPtr& q = quivers[k % quivers.size()];
    const Field& f = fields[(k / 4) % 4];
    const std::size_t n = 5 + rng() % 3;
    auto w = random_cycles(rng, q, f, n + 1);
    auto phi = random_substitution(rng, q, f, n + 1);
    CAPTURE(k);
    CHECK(chain_rule_holds(phi, w));
  }
}

TEST_CASE("transport is functorial") {
  std::mt19937_64 rng(99);
  const std::vector<QuiverPtr> quivers{loop(), two_loops(), q4()};
  for (int k = 0; k < 60; ++k) {
    const QuiverPtr& q = quivers[k % 3];
    const Field f = k % 2 ? kQ : kGF3;
    const std::size_t n = 6;
    auto h = random_valid_family(rng, q, f, n);
    auto phi = random_substitution(rng, q, f, n + 1);
    auto psi = random_substitution(rng, q, f, n + 1);
    auto both = transport(compose(psi, phi), h);
    auto step = transport(psi, transport(phi, h));
    const std::size_t m = std::min(both.trunc(), step.trunc());
    CHECK(both.truncated(m) == step.truncated(m));
    CHECK(check_hyperpotential(step).ok);
  }
}

TEST_CASE("a power and its perturbation by the characteristic") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const Field f = Field::prime(p);
    const QuiverPtr l = loop();
    for (std::size_t n = 2; n <= 6; ++n) {
      auto w = elem(l, f, 12, {{"1", repeat("b", n)}});
      auto w2 = w + elem(l, f, 12, {{"1", repeat("b", p)}});
      CHECK(from_potential(Potential(w)) == from_potential(Potential(w2)));
      CHECK_FALSE(Potential(w) == Potential(w2));
    }
  }
}

TEST_CASE("quotient dimensions are invariant under substitution") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const Field f = k % 2 ? kQ : kGF2;
    auto h = lambda_hyperpotential(3, 2, f, 9);
    auto phi = random_substitution(rng, h.quiver_ptr(), f, 10);
    auto moved = transport(phi, h);
    const std::size_t n = std::min<std::size_t>(moved.trunc(), 8);
    CHECK(jacobian_dimensions(moved, n).dims == jacobian_dimensions(h, n).dims);
  }
}
