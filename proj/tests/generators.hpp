#pragma once

#include <random>
#include <vector>

#include "quiverforge/ginzburg.hpp"
#include "quiverforge/hochschild.hpp"
#include "quiverforge/hyperpotential.hpp"
#include "support.hpp"

namespace testing {

inline QuiverPtr two_cycle() { return share(cycle_quiver(2)); }
inline QuiverPtr three_cycle() { return share(cycle_quiver(3)); }
inline QuiverPtr two_loops() { return share(Quiver({"1"}, {{"a", "1", "1"}, {"b", "1", "1"}})); }
inline QuiverPtr arrow_and_loop() { return share(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "2"}})); }

inline std::vector<Path> cycles_between(const Quiver& q, std::size_t min_len, std::size_t max_len) {
  std::vector<Path> out;
  for (std::size_t len = min_len; len <= max_len; ++len)
    for (const Path& p : paths_of_length(q, len))
      if (path_end(q, p) == p.start) out.push_back(p);
  return out;
}

// Random combination of nontrivial cycles of length < n.
inline AlgebraElement random_cycles(std::mt19937_64& rng, const QuiverPtr& q, const Field& f, std::size_t n,
                                    std::size_t terms = 4) {
  AlgebraElement w(q, f, n);
  const auto pool = cycles_between(*q, 1, n - 1);
  if (pool.empty()) return w;
  for (std::size_t k = 0; k < terms; ++k) w.add_term(pool[rng() % pool.size()], random_scalar(rng, f));
  return w;
}

// Sum alpha rho_alpha drawn from the invariant cycles of degrees 1..n, read
// back as a family known modulo m^n.
inline Hyperpotential random_valid_family(std::mt19937_64& rng, const QuiverPtr& q, const Field& f, std::size_t n) {
  AlgebraElement x(q, f, n + 1);
  for (std::size_t d = 1; d <= n; ++d)
    for (const AlgebraElement& b : hh1_basis(q, f, d).basis) {
      if (rng() % 2) continue;
      const Scalar s = random_scalar(rng, f);
      for (const auto& [p, c] : b.terms()) x.add_term(p, c * s);
    }
  return hyperpotential_from_cycle_sum(x);
}

// Adds one random walk t(alpha) -> s(alpha) to one rho_alpha.
inline Hyperpotential perturbed(std::mt19937_64& rng, const Hyperpotential& h) {
  const Quiver& q = h.quiver();
  std::vector<AlgebraElement> rho = h.rhos();
  for (int attempt = 0; attempt < 16; ++attempt) {
    const std::size_t a = rng() % q.arrow_count();
    std::vector<Path> pool;
    for (std::size_t len = 1; len + 1 < h.trunc(); ++len)
      for (const Path& p : paths_of_length(q, len))
        if (p.start == q.target(a) && path_end(q, p) == q.source(a)) pool.push_back(p);
    if (pool.empty()) continue;
    Scalar c = random_scalar(rng, h.field());
    if (c.is_zero()) c = Scalar::one(h.field());
    rho[a].add_term(pool[rng() % pool.size()], c);
    break;
  }
  return Hyperpotential(h.quiver_ptr(), h.field(), h.trunc(), std::move(rho));
}

// alpha -> c alpha + (later parallel arrows) + (longer walks), c != 0: an
// upper unitriangular-up-to-scaling linear part, hence invertible.
inline Substitution random_substitution(std::mt19937_64& rng, const QuiverPtr& q, const Field& f, std::size_t n) {
  std::vector<AlgebraElement> images;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    AlgebraElement img(q, f, n);
    Scalar c = random_scalar(rng, f);
    while (c.is_zero()) c = random_scalar(rng, f);
    img.add_term(make_path(*q, q->source(a), {a}), c);
    for (std::size_t b = a + 1; b < q->arrow_count(); ++b)
      if (q->source(b) == q->source(a) && q->target(b) == q->target(a) && rng() % 2)
        img.add_term(make_path(*q, q->source(b), {b}), random_scalar(rng, f));
    img += random_element(rng, q, f, n, 2, n - 1, static_cast<int>(q->source(a)), static_cast<int>(q->target(a)), 3);
    images.push_back(std::move(img));
  }
  return Substitution(q, q, std::move(images));
}

// sum over arrows of [alpha, Delta_alpha(x) <> y] against [x, y]. The sum
// only sees e_{t(x)} y e_{s(x)}, so the identity needs x in e_i A_+ e_j and
// y in e_j A e_i.
inline bool commutator_identity_holds(const AlgebraElement& x, const AlgebraElement& y) {
  const QuiverPtr q = x.quiver_ptr();
  AlgebraElement lhs(q, x.field(), x.trunc());
  for (std::size_t a = 0; a < q->arrow_count(); ++a)
    lhs += commutator(AlgebraElement::arrow(q, x.field(), x.trunc(), a), diamond(double_derivation(x, a), y));
  return lhs == commutator(x, y).truncated(lhs.trunc());
}

// Random x in e_i A_+ e_j and y in e_j A e_i for random vertices i, j.
inline std::pair<AlgebraElement, AlgebraElement> random_block_pair(std::mt19937_64& rng, const QuiverPtr& q,
                                                                   const Field& f, std::size_t n) {
  for (;;) {
    const int i = static_cast<int>(rng() % q->vertex_count()), j = static_cast<int>(rng() % q->vertex_count());
    auto x = random_element(rng, q, f, n, 1, n - 1, i, j, 1 + rng() % 4);
    auto y = random_element(rng, q, f, n, 0, n - 1, j, i, 1 + rng() % 4);
    if (!x.is_zero() && !y.is_zero()) return {x, y};
  }
}

inline bool chain_rule_holds(const Substitution& phi, const AlgebraElement& w) {
  const Hyperpotential lhs = transport(phi, from_potential(Potential(w)));
  const Hyperpotential rhs = from_potential(Potential(apply_substitution(phi, w)));
  const std::size_t n = std::min(lhs.trunc(), rhs.trunc());
  return n >= 2 && lhs.truncated(n) == rhs.truncated(n);
}

inline bool d_squared_matches(const Hyperpotential& h) {
  return check_d_squared(build_ginzburg(h)).ok == check_hyperpotential(h).ok;
}

}  // namespace testing
