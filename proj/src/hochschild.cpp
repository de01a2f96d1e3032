#include "quiverforge/hochschild.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quiverforge/error.hpp"
#include "quiverforge/linalg.hpp"

namespace quiverforge {

namespace {

Path rotate_once(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return p;
  Path r{q.source(p.arrows.back()), {p.arrows.back()}};
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end() - 1);
  return r;
}

std::set<Path> rotation_orbit(const Quiver& q, const Path& p) {
  std::set<Path> orbit{p};
  Path r = rotate_once(q, p);
  while (!orbit.count(r)) {
    orbit.insert(r);
    r = rotate_once(q, r);
  }
  return orbit;
}

// Lex-minimal rotation representatives, in sorted order.
std::vector<Path> class_representatives(const Quiver& q, std::size_t d) {
  std::vector<Path> reps;
  for (const Path& c : cycles_of_degree(q, d))
    if (d == 0 || canonical_rotation(q, c) == c) reps.push_back(c);
  return reps;
}

std::size_t homogeneous_degree(const AlgebraElement& h) {
  const std::size_t d = h.terms().begin()->first.length();
  for (const auto& [p, c] : h.terms())
    if (p.length() != d) throw Error("homogeneous element expected: degrees " + std::to_string(d) + " and " +
                                     std::to_string(p.length()) + " both occur");
  return d;
}

}  // namespace

std::vector<Path> cycles_of_degree(const Quiver& q, std::size_t d) {
  std::vector<Path> out;
  for (Path& p : paths_of_length(q, d))
    if (is_cycle(q, p)) out.push_back(std::move(p));
  return out;
}

GradedSubspaceBasis hh0_basis(const QuiverPtr& q, const Field& field, std::size_t d) {
  GradedSubspaceBasis b{d, field, {}};
  for (const Path& rep : class_representatives(*q, d)) b.basis.push_back(AlgebraElement::path(q, field, d + 1, rep));
  return b;
}

HH1Basis hh1_basis(const QuiverPtr& q, const Field& field, std::size_t d) {
  if (d == 0) throw Error("hh1_basis: degree must be at least 1");
  HH1Basis b{d, field, {}, {}};
  for (const Path& rep : class_representatives(*q, d)) {
    AlgebraElement x(q, field, d + 1);
    for (const Path& p : rotation_orbit(*q, rep)) x.add_term(p, Scalar::one(field));
    b.forms.push_back(hyperpotential_from_cycle_sum(x));
    b.basis.push_back(std::move(x));
  }
  return b;
}

Hyperpotential connes_B(const AlgebraElement& w) {
  std::vector<AlgebraElement> rho;
  for (std::size_t a = 0; a < w.quiver().arrow_count(); ++a) rho.push_back(cyclic_derivative(w, a));
  const std::size_t n = w.trunc() == 0 ? 0 : w.trunc() - 1;
  return Hyperpotential(w.quiver_ptr(), w.field(), n, std::move(rho));
}

BPreimage in_image_of_B(const AlgebraElement& h) {
  if (h.is_zero()) return {true, AlgebraElement(h.quiver_ptr(), h.field(), h.trunc())};
  const std::size_t d = homogeneous_degree(h);
  if (!(sigma(h) == h)) throw Error("in_image_of_B: element is not sigma-invariant");
  const Quiver& q = h.quiver();
  std::map<Path, std::size_t> column;
  for (const Path& c : cycles_of_degree(q, d)) column.emplace(c, column.size());
  auto to_vec = [&](const AlgebraElement& x) {
    SparseVec v;
    for (const auto& [p, c] : x.terms()) v.emplace(column.at(p), c);
    return v;
  };
  const std::vector<Path> reps = class_representatives(q, d);
  Echelon ech(h.field(), true);
  for (const Path& rep : reps) ech.insert(to_vec(norm_map(AlgebraElement::path(h.quiver_ptr(), h.field(), d + 1, rep))));
  auto sol = ech.solve(to_vec(h));
  if (!sol) return {false, std::nullopt};
  AlgebraElement pre(h.quiver_ptr(), h.field(), h.trunc());
  for (const auto& [k, c] : *sol) pre.add_term(reps.at(k), c);
  return {true, std::move(pre)};
}

BPreimage in_image_of_B(const Hyperpotential& h) { return in_image_of_B(h.cycle_sum()); }

DegreeRow hochschild_degree(const Quiver& q, const Field& field, std::size_t d) {
  const QuiverPtr qp = share(q);
  const std::vector<Path> cycles = cycles_of_degree(q, d);
  std::map<Path, std::size_t> column;
  for (const Path& c : cycles) column.emplace(c, column.size());
  auto to_vec = [&](const AlgebraElement& x) {
    SparseVec v;
    for (const auto& [p, c] : x.terms()) v.emplace(column.at(p), c);
    return v;
  };
  Echelon one_minus_sigma(field), norm(field);
  for (const Path& c : cycles) {
    AlgebraElement x = AlgebraElement::path(qp, field, d + 1, c);
    one_minus_sigma.insert(to_vec(x - sigma(x)));
    if (d > 0) norm.insert(to_vec(norm_map(x)));
  }
  DegreeRow row;
  row.degree = d;
  row.cycles = cycles.size();
  row.hh0 = cycles.size() - one_minus_sigma.rank();
  row.hh1 = d == 0 ? 0 : cycles.size() - one_minus_sigma.rank();
  row.b_rank = norm.rank();
  return row;
}

}  // namespace quiverforge
