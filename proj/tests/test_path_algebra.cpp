#include "doctest.h"
#include "quiverforge/error.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("multiplication and truncation") {
  const QuiverPtr l = loop();
  auto x = elem(l, kQ, 3, {{"1", "e_1"}, {"1", "b"}});
  auto y = elem(l, kQ, 3, {{"1", "e_1"}, {"-1", "b"}});
  CHECK(x * y == elem(l, kQ, 3, {{"1", "e_1"}, {"-1", "b b"}}));

  auto z = elem(l, kGF2, 3, {{"1", "e_1"}, {"1", "b"}});
  CHECK(z * z == elem(l, kGF2, 3, {{"1", "e_1"}, {"1", "b b"}}));

  const QuiverPtr q = q4();
  auto a1 = elem(q, kQ, 5, {{"1", "a1"}});
  auto a2 = elem(q, kQ, 5, {{"1", "a2"}});
  CHECK(a1 * a2 == elem(q, kQ, 5, {{"1", "a1 a2"}}));
  CHECK((a2 * a1).is_zero());

  // Products keep the smaller truncation order.
  auto longer = elem(q, kQ, 9, {{"1", "a2 a3"}});
  CHECK((a1 * longer).trunc() == 5);
  CHECK((a1 * longer) == elem(q, kQ, 5, {{"1", "a1 a2 a3"}}));
  CHECK((elem(q, kQ, 3, {{"1", "a1 a2"}}) * a2.truncated(3) * elem(q, kQ, 3, {{"1", "a3"}})).is_zero());
}

TEST_CASE("mixed fields and quivers are rejected") {
  CHECK_THROWS_AS(elem(loop(), kQ, 3, {{"1", "b"}}) + elem(loop(), kGF2, 3, {{"1", "b"}}), Error);
  CHECK_THROWS_AS(elem(loop(), kQ, 3, {{"1", "b"}}) * elem(q4(), kQ, 3, {{"1", "a1"}}), Error);
}

TEST_CASE("commutators") {
  const QuiverPtr l = loop();
  CHECK(commutator(elem(l, kQ, 6, {{"1", "b"}}), elem(l, kQ, 6, {{"1", "b b"}})).is_zero());

  const QuiverPtr q = q4();
  auto c = commutator(elem(q, kQ, 6, {{"1", "a1"}}), elem(q, kQ, 6, {{"1", "a2 a3 a4"}}));
  CHECK(c == elem(q, kQ, 6, {{"1", "a1 a2 a3 a4"}, {"-1", "a2 a3 a4 a1"}}));

  auto x = elem(q, kQ, 6, {{"1", "a1"}, {"2", "e_2"}, {"1", "a1 a2 a3 a4"}});
  auto e1 = elem(q, kQ, 6, {{"1", "e_1"}});
  CHECK(commutator(e1, x) == elem(q, kQ, 6, {{"1", "a1"}}));
}

TEST_CASE("rotation and norm map") {
  const QuiverPtr q = q4();
  CHECK(sigma(elem(q, kQ, 6, {{"1", "a1 a2 a3 a4"}})) == elem(q, kQ, 6, {{"1", "a4 a1 a2 a3"}}));
  CHECK(sigma(elem(q, kQ, 6, {{"1", "a1 a2"}})).is_zero());
  CHECK(sigma(elem(q, kQ, 6, {{"1", "e_3"}})) == elem(q, kQ, 6, {{"1", "e_3"}}));

  const QuiverPtr l = loop();
  CHECK(norm_map(elem(l, kQ, 6, {{"1", "b b b b"}})) == elem(l, kQ, 6, {{"4", "b b b b"}}));
  CHECK(norm_map(elem(l, kQ, 6, {{"1", "e_1"}})).is_zero());

  const QuiverPtr q2 = share(cycle_quiver(2));
  CHECK(norm_map(elem(q2, kQ, 4, {{"1", "a1 a2"}})) == elem(q2, kQ, 4, {{"1", "a1 a2"}, {"1", "a2 a1"}}));
}

TEST_CASE("rotation has order equal to the cycle length") {
  const QuiverPtr q = share(cycle_quiver(3));
  for (std::size_t len = 1; len <= 7; ++len)
    for (const Path& p : paths_of_length(*q, len)) {
      if (!is_cycle(*q, p)) continue;
      AlgebraElement x = AlgebraElement::path(q, kQ, 9, p);
      AlgebraElement y = x;
      for (std::size_t k = 0; k < len; ++k) y = sigma(y);
      CHECK(y == x);
    }
}

TEST_CASE("cyclic derivatives") {
  const QuiverPtr l = loop();
  const std::size_t b = l->arrow_index("b");
  for (std::size_t n = 1; n <= 6; ++n) {
    auto d = cyclic_derivative(elem(l, kQ, 8, {{"1", repeat("b", n)}}), b);
    CHECK(d.trunc() == 7);
    CHECK(d == elem(l, kQ, 7, {{std::to_string(n), n == 1 ? "e_1" : repeat("b", n - 1)}}));
  }

  const QuiverPtr q = q4();
  auto w = elem(q, kQ, 10, {{"1", repeat("a1 a2 a3 a4", 2)}});
  CHECK(cyclic_derivative(w, q->arrow_index("a1")) == elem(q, kQ, 9, {{"2", "a2 a3 a4 a1 a2 a3 a4"}}));
  CHECK(cyclic_derivative(elem(l, kQ, 8, {{"1", "b b"}}), b) == elem(l, kQ, 7, {{"2", "b"}}));
  CHECK_THROWS_WITH_AS(cyclic_derivative(elem(q, kQ, 5, {{"1", "a1 a2"}}), 0), doctest::Contains("potential expected"),
                       Error);

  const QuiverPtr two = share(Quiver({"1"}, {{"a", "1", "1"}, {"b", "1", "1"}}));
  CHECK(cyclic_derivative(elem(two, kQ, 5, {{"1", "a a a"}}), two->arrow_index("b")).is_zero());
}

TEST_CASE("double derivation and the diamond product") {
  const QuiverPtr l = loop();
  const std::size_t b = l->arrow_index("b");
  Tensor t = double_derivation(elem(l, kQ, 6, {{"1", "b b"}}), b);
  Tensor expect{l, kQ, 5, {}};
  expect.add_term(trivial_path(0), word(*l, "b"), Scalar::one(kQ));
  expect.add_term(word(*l, "b"), trivial_path(0), Scalar::one(kQ));
  CHECK(t == expect);
  CHECK(diamond(t, elem(l, kQ, 6, {{"1", "b"}})) == elem(l, kQ, 5, {{"2", "b b"}}));

  const QuiverPtr q = q4();
  Tensor t2 = double_derivation(elem(q, kQ, 6, {{"1", "a1 a2"}}), q->arrow_index("a1"));
  REQUIRE(t2.terms.size() == 1);
  CHECK(t2.terms.begin()->first == std::make_pair(trivial_path(0), word(*q, "a2")));
  CHECK(double_derivation(elem(q, kQ, 6, {{"1", "a1"}}), q->arrow_index("a2")).terms.empty());

  Tensor unit{l, kQ, 6, {}};
  unit.add_term(trivial_path(0), trivial_path(0), Scalar::one(kQ));
  auto x = elem(l, kQ, 6, {{"3", "b b"}, {"1/2", "e_1"}});
  CHECK(diamond(unit, x) == x);

  // sum over arrows of [alpha, Delta_alpha(b^2) <> b] equals [b^2, b] = 0
  auto y = elem(l, kQ, 6, {{"1", "b"}});
  auto lhs = commutator(elem(l, kQ, 6, {{"1", "b"}}), diamond(t, y));
  CHECK(lhs.is_zero());
}

TEST_CASE("the commutator identity only sees the matching block of y") {
  const QuiverPtr q = share(Quiver({"1", "2"}, {{"a", "1", "2"}}));
  auto x = elem(q, kQ, 4, {{"1", "a"}});
  auto y = elem(q, kQ, 4, {{"1", "e_1"}});
  auto lhs = commutator(x, diamond(double_derivation(x, 0), y));
  CHECK(lhs.is_zero());
  CHECK(commutator(x, y) == elem(q, kQ, 4, {{"-1", "a"}}));
  // y = 1: both sides vanish
  auto y2 = elem(q, kQ, 4, {{"1", "e_1"}, {"1", "e_2"}});
  CHECK(commutator(x, diamond(double_derivation(x, 0), y2)).is_zero());
  CHECK(commutator(x, y2).is_zero());
}

TEST_CASE("substitutions") {
  const QuiverPtr l = loop();
  auto a = elem(l, kQ, 5, {{"1", "b b"}});
  CHECK(apply_substitution(Substitution::identity(l, kQ, 5), a) == a);

  Substitution phi(l, l, {elem(l, kQ, 5, {{"1", "b"}, {"1", "b b"}})});
  CHECK(apply_substitution(phi, a) == elem(l, kQ, 5, {{"1", "b b"}, {"2", "b b b"}, {"1", "b b b b"}}));

  for (std::size_t k = 1; k <= 4; ++k) {
    Substitution scale(l, l, {elem(l, kQ, 6, {{"3", "b"}})});
    mpq_class c = 1;
    for (std::size_t j = 0; j < k; ++j) c *= 3;
    CHECK(apply_substitution(scale, elem(l, kQ, 6, {{"1", repeat("b", k)}})) ==
          elem(l, kQ, 6, {{c.get_str(), repeat("b", k)}}));
  }

  const QuiverPtr q = q4();
  CHECK_THROWS_AS(Substitution(q, q, {elem(q, kQ, 5, {{"1", "a2"}}), elem(q, kQ, 5, {{"1", "a2"}}),
                                      elem(q, kQ, 5, {{"1", "a3"}}), elem(q, kQ, 5, {{"1", "a4"}})}),
                  Error);
  CHECK_THROWS_AS(Substitution(l, l, {elem(l, kQ, 5, {{"1", "e_1"}, {"1", "b"}})}), Error);

  Substitution singular(l, l, {elem(l, kQ, 5, {{"1", "b b"}})});
  CHECK_FALSE(singular.linear_part_invertible());
  CHECK(phi.linear_part_invertible());
}

TEST_CASE("composition of substitutions") {
  const QuiverPtr l = loop();
  Substitution f(l, l, {elem(l, kQ, 6, {{"1", "b"}, {"1", "b b"}})});
  Substitution g(l, l, {elem(l, kQ, 6, {{"2", "b"}, {"-1", "b b b"}})});
  auto x = elem(l, kQ, 6, {{"1", "b b"}, {"5", "b b b"}, {"1", "e_1"}});
  CHECK(apply_substitution(compose(f, g), x) == apply_substitution(f, apply_substitution(g, x)));
}
