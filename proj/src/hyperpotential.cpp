#include "quiverforge/hyperpotential.hpp"

#include <algorithm>

#include "quiverforge/error.hpp"

namespace quiverforge {

Path canonical_rotation(const Quiver& q, const Path& cycle) {
  if (cycle.is_trivial() || !is_cycle(q, cycle))
    throw Error("canonical_rotation: " + path_to_string(q, cycle) + " is not a nontrivial cycle");
  const std::size_t n = cycle.length();
  std::vector<std::size_t> best = cycle.arrows;
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<std::size_t> rot;
    rot.reserve(n);
    for (std::size_t k = 0; k < n; ++k) rot.push_back(cycle.arrows[(j + k) % n]);
    if (rot < best) best = std::move(rot);
  }
  return Path{q.source(best.front()), std::move(best)};
}

Potential::Potential(const AlgebraElement& w) : w_(w.quiver_ptr(), w.field(), w.trunc()) {
  for (const auto& [p, c] : w.terms()) {
    if (p.is_trivial()) throw Error("potential: trivial path " + path_to_string(w.quiver(), p) + " is not allowed");
    if (!is_cycle(w.quiver(), p))
      throw Error("potential expected: term " + path_to_string(w.quiver(), p) + " is not a cycle");
    w_.add_term(canonical_rotation(w.quiver(), p), c);
  }
}

Hyperpotential::Hyperpotential(QuiverPtr quiver, Field field, std::size_t trunc, std::vector<AlgebraElement> rho)
    : quiver_(std::move(quiver)), field_(field), trunc_(trunc) {
  if (rho.size() != quiver_->arrow_count()) throw Error("hyperpotential: expected one rho per arrow");
  for (std::size_t a = 0; a < rho.size(); ++a) {
    const AlgebraElement& r = rho[a];
    const Arrow& arr = quiver_->arrow(a);
    if (!same_quiver(r.quiver_ptr(), quiver_)) throw Error("hyperpotential: rho_" + arr.id + " over another quiver");
    if (!(r.field() == field_)) throw Error("hyperpotential: rho_" + arr.id + " over another field");
    if (r.trunc() < trunc_)
      throw Error("hyperpotential: rho_" + arr.id + " known only modulo m^" + std::to_string(r.trunc()));
    const std::size_t from = quiver_->target(a);
    const std::size_t to = quiver_->source(a);
    for (const auto& [p, c] : r.terms())
      if (p.start != from || path_end(*quiver_, p) != to)
        throw Error("hyperpotential: rho_" + arr.id + " has term " + path_to_string(*quiver_, p) +
                    " outside e_" + arr.to + " A e_" + arr.from);
    rho_.push_back(r.truncated(trunc_));
  }
}

Hyperpotential Hyperpotential::zero(QuiverPtr quiver, Field field, std::size_t trunc) {
  std::vector<AlgebraElement> rho(quiver->arrow_count(), AlgebraElement(quiver, field, trunc));
  return Hyperpotential(quiver, field, trunc, std::move(rho));
}

Hyperpotential Hyperpotential::scaled(const Scalar& c) const {
  std::vector<AlgebraElement> rho;
  for (const auto& r : rho_) rho.push_back(r * c);
  return Hyperpotential(quiver_, field_, trunc_, std::move(rho));
}

Hyperpotential Hyperpotential::truncated(std::size_t n) const {
  return Hyperpotential(quiver_, field_, std::min(n, trunc_), rho_);
}

AlgebraElement Hyperpotential::cycle_sum() const {
  AlgebraElement x(quiver_, field_, trunc_ + 1);
  for (std::size_t a = 0; a < rho_.size(); ++a) {
    AlgebraElement alpha = AlgebraElement::arrow(quiver_, field_, trunc_ + 1, a);
    AlgebraElement r(quiver_, field_, trunc_ + 1);
    for (const auto& [p, c] : rho_[a].terms()) r.add_term(p, c);
    x += alpha * r;
  }
  return x;
}

bool Hyperpotential::operator==(const Hyperpotential& o) const {
  return same_quiver(quiver_, o.quiver_) && field_ == o.field_ && trunc_ == o.trunc_ && rho_ == o.rho_;
}

HyperpotentialReport check_hyperpotential(const Hyperpotential& h) {
  HyperpotentialReport rep{false, h.trunc(), AlgebraElement(h.quiver_ptr(), h.field(), h.trunc()), {}};
  for (std::size_t a = 0; a < h.quiver().arrow_count(); ++a) {
    AlgebraElement alpha = AlgebraElement::arrow(h.quiver_ptr(), h.field(), h.trunc(), a);
    rep.residual += commutator(alpha, h.rho(a));
  }
  rep.ok = rep.residual.is_zero();
  for (std::size_t v = 0; v < h.quiver().vertex_count(); ++v) {
    AlgebraElement b = rep.residual.block(v, v);
    if (!b.is_zero()) rep.blocks.emplace_back(v, std::move(b));
  }
  return rep;
}

Hyperpotential hyperpotential_from_cycle_sum(const AlgebraElement& x) {
  const Quiver& q = x.quiver();
  const std::size_t n = x.trunc() == 0 ? 0 : x.trunc() - 1;
  std::vector<AlgebraElement> rho(q.arrow_count(), AlgebraElement(x.quiver_ptr(), x.field(), n));
  for (const auto& [p, c] : x.terms()) {
    if (p.is_trivial() || !is_cycle(q, p))
      throw Error("cycle sum expected: term " + path_to_string(q, p) + " is not a nontrivial cycle");
    const std::size_t alpha = p.arrows.front();
    Path rest{q.target(alpha), std::vector<std::size_t>(p.arrows.begin() + 1, p.arrows.end())};
    rho[alpha].add_term(rest, c);
  }
  return Hyperpotential(x.quiver_ptr(), x.field(), n, std::move(rho));
}

Hyperpotential from_potential(const Potential& w) {
  const AlgebraElement& el = w.element();
  std::vector<AlgebraElement> rho;
  for (std::size_t a = 0; a < el.quiver().arrow_count(); ++a) rho.push_back(cyclic_derivative(el, a));
  const std::size_t n = el.trunc() == 0 ? 0 : el.trunc() - 1;
  return Hyperpotential(el.quiver_ptr(), el.field(), n, std::move(rho));
}

Hyperpotential transport(const Substitution& phi, const Hyperpotential& h) {
  if (!same_quiver(phi.source(), h.quiver_ptr())) throw Error("transport: substitution source differs from quiver");
  const Quiver& src = *phi.source();
  const Quiver& tgt = *phi.target();
  std::vector<AlgebraElement> phi_rho;
  for (std::size_t a = 0; a < src.arrow_count(); ++a) phi_rho.push_back(apply_substitution(phi, h.rho(a)));

  std::vector<AlgebraElement> rho2;
  std::size_t n = h.trunc();
  for (std::size_t b = 0; b < tgt.arrow_count(); ++b) {
    AlgebraElement acc(phi.target(), h.field(), h.trunc());
    for (std::size_t a = 0; a < src.arrow_count(); ++a)
      acc += diamond(double_derivation(phi.image(a), b), phi_rho[a]);
    n = std::min(n, acc.trunc());
    rho2.push_back(std::move(acc));
  }
  if (src.arrow_count() == 0) n = h.trunc();
  return Hyperpotential(phi.target(), h.field(), n, std::move(rho2));
}

bool verify_right_equivalence(const Substitution& phi, const Hyperpotential& h, const Hyperpotential& h2) {
  if (!phi.linear_part_invertible()) throw Error("substitution is not invertible (linear part is singular)");
  const Hyperpotential moved = transport(phi, h);
  if (!same_quiver(moved.quiver_ptr(), h2.quiver_ptr())) return false;
  const std::size_t n = std::min(moved.trunc(), h2.trunc());
  return moved.truncated(n) == h2.truncated(n);
}

bool verify_weak_right_equivalence(const Substitution& phi, const Scalar& c, const Hyperpotential& h,
                                   const Hyperpotential& h2) {
  if (c.is_zero()) throw Error("weak right equivalence needs a unit c");
  return verify_right_equivalence(phi, h.scaled(c), h2);
}

}  // namespace quiverforge
