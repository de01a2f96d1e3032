#pragma once

#include <array>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <vector>

namespace quiverforge {

// (d, e) meaning S^e ~ Sigma^d.
struct CYPair {
  long d = 0;
  long e = 0;
  bool operator==(const CYPair&) const = default;
};

struct HomFiniteResult {
  long determinant = 0;  // e1 d2 - e2 d1
  bool hom_finite = false;
};

HomFiniteResult hom_finite(CYPair g1, CYPair g2);

enum class Certificate { L, TwoL };

struct Membership {
  bool member = false;
  std::array<long, 2> coeffs{0, 0};  // with respect to the two generators
};

class CYLattice {
 public:
  // Any two generators; Hermite normal form computed eagerly.
  CYLattice(CYPair g1, CYPair g2);

  CYPair generator(int i) const { return i == 0 ? g1_ : g2_; }
  std::size_t rank() const { return hnf_.size(); }
  // d1 e2 - d2 e1
  long determinant() const { return det_; }
  // Nonzero rows of the Hermite normal form.
  const std::vector<std::array<long, 2>>& hnf() const { return hnf_; }
  // Row i of the unimodular transform: hnf row i = sum_j u_ij g_j.
  const std::vector<std::array<long, 2>>& transform() const { return transform_; }
  bool parity_first() const;   // d2 even or e2 odd
  bool parity_second() const;  // d1 - d2 even or e1 - e2 odd
  Certificate certificate() const { return parity_first() && parity_second() ? Certificate::L : Certificate::TwoL; }

 private:
  CYPair g1_, g2_;
  long det_;
  std::vector<std::array<long, 2>> hnf_;
  std::vector<std::array<long, 2>> transform_;
};

// Throws "orbit category not Hom-finite" when the determinant vanishes.
CYLattice cy_dimensions(CYPair g1, CYPair g2);

// Membership in L itself.
Membership member(CYPair x, const CYLattice& lat);
// Membership in the certified set (L or 2L); coefficients refer to the
// generators of that set.
Membership member_certified(CYPair x, const CYLattice& lat);

// Smallest n > 0 with (n r, n) in the certified set; returns (n r, n).
CYPair solve_ratio(const mpq_class& r, const CYLattice& lat);

struct DynkinCY {
  CYPair pair;
  bool extension = false;  // value not taken from the D/E8 data
};

DynkinCY dynkin_cy_data(std::string_view diagram);

std::string certificate_name(Certificate c);

}  // namespace quiverforge
