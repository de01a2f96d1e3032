#include <algorithm>
#include <set>

#include "doctest.h"
#include "quiverforge/error.hpp"
#include "quiverforge/hochschild.hpp"
#include "support.hpp"

using namespace testing;

namespace {

QuiverPtr two_loops() { return share(Quiver({"1"}, {{"a", "1", "1"}, {"b", "1", "1"}})); }

// Number of rotation classes of cycles of length d, by brute force over words.
std::size_t rotation_orbits(const Quiver& q, std::size_t d) {
  std::set<std::vector<std::size_t>> seen;
  for (const Path& p : paths_of_length(q, d)) {
    if (path_end(q, p) != p.start) continue;
    std::vector<std::size_t> w(p.arrows.begin(), p.arrows.end()), best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      best = std::min(best, w);
    }
    seen.insert(best);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("degree zero classes are rotation classes") {
  auto l = hh0_basis(loop(), kQ, 3);
  REQUIRE(l.basis.size() == 1);
  CHECK(l.basis[0] == elem(loop(), kQ, 4, {{"1", "b b b"}}));

  const QuiverPtr q = q4();
  auto c4 = hh0_basis(q, kQ, 4);
  REQUIRE(c4.basis.size() == 1);
  CHECK(c4.basis[0] == elem(q, kQ, 5, {{"1", "a1 a2 a3 a4"}}));
  CHECK(hh0_basis(q, kQ, 3).basis.empty());
  CHECK(hh0_basis(q, kQ, 0).basis.size() == 4);
}

TEST_CASE("invariant cycles") {
  auto l = hh1_basis(loop(), kQ, 4);
  REQUIRE(l.basis.size() == 1);
  CHECK(l.basis[0] == elem(loop(), kQ, 5, {{"1", "b b b b"}}));
  REQUIRE(l.forms.size() == 1);
  CHECK(l.forms[0].rho(0) == elem(loop(), kQ, 4, {{"1", "b b b"}}));

  const QuiverPtr q2 = share(cycle_quiver(2));
  auto c2 = hh1_basis(q2, kQ, 2);
  REQUIRE(c2.basis.size() == 1);
  CHECK(c2.basis[0] == elem(q2, kQ, 3, {{"1", "a1 a2"}, {"1", "a2 a1"}}));
  CHECK(hh1_basis(q4(), kQ, 3).basis.empty());
  CHECK_THROWS_AS(hh1_basis(q4(), kQ, 0), Error);
}

TEST_CASE("every invariant form is a hyperpotential") {
  for (const QuiverPtr& q : {q4(), loop(), two_loops()})
    for (const Field& f : {kQ, kGF2, kGF3})
      for (std::size_t d = 1; d <= 6; ++d)
        for (const auto& h : hh1_basis(q, f, d).forms) CHECK(check_hyperpotential(h).ok);
}

TEST_CASE("Connes' map") {
  const QuiverPtr l = loop();
  CHECK(connes_B(elem(l, kQ, 5, {{"1", "b b b b"}})).rho(0) == elem(l, kQ, 4, {{"4", "b b b"}}));
  CHECK(connes_B(elem(l, kGF2, 5, {{"1", "b b b b"}})).rho(0).is_zero());

  const QuiverPtr q = q4();
  auto h = connes_B(elem(q, kQ, 9, {{"1", repeat("a1 a2 a3 a4", 2)}}));
  const std::vector<std::string> rho = {"a2 a3 a4 a1 a2 a3 a4", "a3 a4 a1 a2 a3 a4 a1",
                                        "a4 a1 a2 a3 a4 a1 a2", "a1 a2 a3 a4 a1 a2 a3"};
  for (std::size_t i = 0; i < 4; ++i) CHECK(h.rho(q->arrow_index("a" + std::to_string(i + 1))) ==
                                            elem(q, kQ, 8, {{"2", rho[i]}}));
  CHECK(check_hyperpotential(h).ok);
  CHECK(h.cycle_sum() == norm_map(elem(q, kQ, 9, {{"1", repeat("a1 a2 a3 a4", 2)}})));
}

TEST_CASE("preimages under Connes' map") {
  const QuiverPtr l = loop();
  auto gf2 = in_image_of_B(elem(l, kGF2, 5, {{"1", "b b b b"}}));
  CHECK_FALSE(gf2.in_image);
  CHECK_FALSE(gf2.preimage.has_value());

  auto q = in_image_of_B(elem(l, kQ, 5, {{"1", "b b b b"}}));
  REQUIRE(q.in_image);
  REQUIRE(q.preimage.has_value());
  CHECK(q.preimage->terms().size() == 1);
  CHECK(q.preimage->coefficient(word(*l, "b b b b")) == Scalar(kQ, mpq_class(1, 4)));

  auto zero = in_image_of_B(AlgebraElement(l, kGF2, 5));
  CHECK(zero.in_image);
  CHECK(zero.preimage->is_zero());

  CHECK_THROWS_AS(in_image_of_B(elem(l, kQ, 5, {{"1", "b b"}, {"1", "b b b"}})), Error);
  const QuiverPtr q2 = share(cycle_quiver(2));
  CHECK_THROWS_AS(in_image_of_B(elem(q2, kQ, 3, {{"1", "a1 a2"}})), Error);

  // Hyperpotential form: rho_b = b^3 over GF(2) is not a derivative.
  CHECK_FALSE(in_image_of_B(Hyperpotential(l, kGF2, 4, {elem(l, kGF2, 4, {{"1", "b b b"}})})).in_image);
}

TEST_CASE("over the rationals every invariant element has a preimage") {
  for (const QuiverPtr& q : {q4(), loop(), two_loops(), share(cycle_quiver(3))})
    for (std::size_t d = 1; d <= 6; ++d) {
      auto basis = hh1_basis(q, kQ, d);
      for (std::size_t k = 0; k < basis.basis.size(); ++k) {
        AlgebraElement h = basis.basis[k];
        if (k + 1 < basis.basis.size()) h += basis.basis[k + 1] * Scalar(kQ, mpq_class(-2, 3));
        auto r = in_image_of_B(h);
        REQUIRE(r.in_image);
        CHECK(norm_map(*r.preimage) == h);
      }
    }
}

TEST_CASE("degree table counts rotation classes") {
  for (const QuiverPtr& q : {q4(), loop(), two_loops()})
    for (const Field& f : {kQ, kGF2, kGF3})
      for (std::size_t d = 0; d <= 7; ++d) {
        DegreeRow r = hochschild_degree(*q, f, d);
        CHECK(r.degree == d);
        CHECK(r.cycles == cycles_of_degree(*q, d).size());
        CHECK(r.hh0 == hh0_basis(q, f, d).basis.size());
        if (d > 0) {
          CHECK(r.hh0 == rotation_orbits(*q, d));
          CHECK(r.hh1 == r.hh0);
          CHECK(r.hh1 == hh1_basis(q, f, d).basis.size());
          CHECK(r.b_rank <= r.hh1);
        } else {
          CHECK(r.b_rank == 0);
        }
      }
}

TEST_CASE("rank of Connes' map on the loop") {
  for (std::size_t d = 1; d <= 8; ++d) {
    CHECK(hochschild_degree(loop_quiver(), kQ, d).b_rank == 1);
    CHECK(hochschild_degree(loop_quiver(), kGF2, d).b_rank == (d % 2 == 0 ? 0u : 1u));
    CHECK(hochschild_degree(loop_quiver(), kGF3, d).b_rank == (d % 3 == 0 ? 0u : 1u));
  }
}
