#include <algorithm>
#include <random>

#include "doctest.h"
#include "quiverforge/cluster_rank2.hpp"
#include "quiverforge/error.hpp"

using namespace quiverforge;

namespace {

const std::vector<std::string> kXY{"x", "y"};

RationalFunction rf(const std::string& s) { return parse_rational_function(s, kXY); }

// The eight variables in hand-written form.
const std::vector<std::string> kExpected{
    "y",
    "(1+x^3)/y",
    "(x^6+3x^3y+2x^3+(y+1)^3)/(x^3y^2)",
    "(x^3+(y+1)^3)/(x^3y)",
    "(y+1)/x",
    "x",
    "(x^3+y+1)/(xy)",
    "(x^3+(y+1)^2)/(x^2y)",
};

std::vector<RationalFunction> sorted_expected() {
  std::vector<RationalFunction> out;
  for (const auto& s : kExpected) out.push_back(rf(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const MultiPoly one = MultiPoly::constant(2, 1);
  CHECK((x + y).pow(2) == x * x + x * y * mpz_class(2) + y * y);
  CHECK(exact_divide(x * x - y * y, x - y) == x + y);
  CHECK_THROWS_AS(exact_divide(x * x + one, x + y), InternalError);
  CHECK(gcd((x + y) * (x - one), (x + y) * (y + one)) == x + y);
  CHECK(gcd(x * mpz_class(6), x * y * mpz_class(4)) == x * mpz_class(2));
  CHECK(gcd(MultiPoly(2), MultiPoly(2)).is_zero());
  CHECK(gcd(-(x + one), MultiPoly(2)) == x + one);
  CHECK((x * y * y).degree_in(1) == 2);
  CHECK((x * x * y + y).to_string(kXY) == "x^2y+y");
}

TEST_CASE("rational functions reduce") {
  CHECK(rf("(x^2-y^2)/(x-y)") == rf("x+y"));
  CHECK(rf("(x+1)/(-2x-2)") == rf("-1/2"));
  CHECK(rf("x/y") * rf("y/x") == rf("1"));
  CHECK(rf("1/x") + rf("1/y") == rf("(x+y)/(xy)"));
  CHECK(rf("(y+1)/x").to_string(kXY) == "(y+1)/x");
  CHECK(rf("(x^3+y+1)/(xy)").to_string(kXY) == "(x^3+y+1)/(xy)");
  CHECK(rf("2x/(4y)") == rf("x/(2y)"));
  CHECK(rf("2x/(4y)").denominator() == MultiPoly::variable(2, 1) * mpz_class(2));
  CHECK_THROWS_AS(rf("x/0"), Error);
  CHECK_THROWS_AS(rf("x+"), Error);
  CHECK_THROWS_AS(rf("z"), Error);
  CHECK_THROWS_AS(rf("(x"), Error);
}

TEST_CASE("Laurent checks") {
  CHECK(laurent_check(rf("x+y")));
  CHECK(laurent_check(rf("(x^3+1)/y")));
  CHECK_FALSE(laurent_check(rf("(x+1)/(y+1)")));
  CHECK(positive_laurent(rf("(x^3+(y+1)^3)/(x^3y)")));
  CHECK_FALSE(positive_laurent(rf("(x-1)/y")));
}

TEST_CASE("skew-symmetrizers") {
  CHECK(skew_symmetrizer(g2_exchange_matrix()) == std::vector<long>{3, 1});
  CHECK(skew_symmetrizer(a2_exchange_matrix()) == std::vector<long>{1, 1});
  CHECK_THROWS_AS(skew_symmetrizer({{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(skew_symmetrizer({{1, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(skew_symmetrizer({{0, 1}, {0, 0}}), Error);
  CHECK_THROWS_AS(initial_seed({{0, 1}, {-1, 0}}, {"x"}), Error);
}

TEST_CASE("one mutation by hand") {
  auto s = initial_seed(g2_exchange_matrix(), kXY);
  auto m1 = mutate(s, 0);
  CHECK(m1.vars[0] == rf("(y+1)/x"));
  CHECK(m1.vars[1] == rf("y"));
  CHECK(m1.b == std::vector<std::vector<long>>{{0, 1}, {-3, 0}});
  auto m2 = mutate(s, 1);
  CHECK(m2.vars[1] == rf("(x^3+1)/y"));
  CHECK_THROWS_AS(mutate(s, 2), Error);
}

TEST_CASE("mutation is an involution") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> u(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const long b = u(rng), c = u(rng);
    const std::vector<std::vector<long>> mat{{0, b}, {-c, 0}};
    auto s = initial_seed(mat, kXY);
    for (std::size_t k : {0u, 1u})
      for (auto conv : {ExchangeConvention::Row, ExchangeConvention::Column})
        CHECK(mutate(mutate(s, k, conv), k, conv) == s);
  }
}

TEST_CASE("G2 cluster variables") {
  auto s = initial_seed(g2_exchange_matrix(), kXY);
  auto closure = enumerate_variables(s);
  CHECK(closure.variables == sorted_expected());
  CHECK(closure.clusters.size() == 8);
  CHECK(is_cycle_graph(closure.exchange));
  CHECK(is_cycle_graph(exchange_pattern(s)));
  for (const auto& v : closure.variables) CHECK(positive_laurent(v));

  auto ordered = mutation_order_variables(s);
  REQUIRE(ordered.size() == 8);
  std::vector<std::string> shown;
  for (const auto& v : ordered) shown.push_back(v.display(kXY));
  CHECK(shown == std::vector<std::string>{"x", "y", "(y+1)/x", "(x^3+(y+1)^3)/(x^3y)", "(x^3+(y+1)^2)/(x^2y)",
                                          "(x^6+3x^3y+2x^3+(y+1)^3)/(x^3y^2)", "(x^3+y+1)/(xy)", "(x^3+1)/y"});
  for (std::size_t k = 0; k < ordered.size(); ++k) CHECK(rf(shown[k]) == ordered[k]);
}

TEST_CASE("the column convention gives other variables") {
  auto s = initial_seed(g2_exchange_matrix(), kXY);
  auto col = enumerate_variables(s, ExchangeConvention::Column);
  CHECK(col.variables.size() == 8);
  CHECK(col.variables != sorted_expected());
  CHECK(std::find(col.variables.begin(), col.variables.end(), rf("(y^3+1)/x")) != col.variables.end());
}

TEST_CASE("A2 has a pentagon") {
  auto closure = enumerate_variables(initial_seed(a2_exchange_matrix(), kXY));
  CHECK(closure.variables.size() == 5);
  CHECK(closure.clusters.size() == 5);
  CHECK(is_cycle_graph(closure.exchange));
  std::vector<RationalFunction> expect{rf("x"), rf("y"), rf("(y+1)/x"), rf("(x+1)/y"), rf("(x+y+1)/(xy)")};
  std::sort(expect.begin(), expect.end());
  CHECK(closure.variables == expect);
}

TEST_CASE("infinite type hits the cap") {
  CHECK_THROWS_AS(enumerate_variables(initial_seed({{0, 2}, {-2, 0}}, kXY), ExchangeConvention::Row, 20), Error);
}
