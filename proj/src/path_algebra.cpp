#include "quiverforge/path_algebra.hpp"

#include <algorithm>

#include "quiverforge/error.hpp"
#include "quiverforge/linalg.hpp"

namespace quiverforge {

namespace {

std::size_t minus_one(std::size_t n) { return n == 0 ? 0 : n - 1; }

Path concat(const Path& a, const Path& b) {
  Path r{a.start, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

Path rotate_to(const Path& p, std::size_t j, const Quiver& q) {
  // Rotation starting at arrow j: a_j ... a_n a_1 ... a_(j-1).
  Path r;
  r.start = q.source(p.arrows[j]);
  r.arrows.reserve(p.arrows.size());
  for (std::size_t k = 0; k < p.arrows.size(); ++k) r.arrows.push_back(p.arrows[(j + k) % p.arrows.size()]);
  return r;
}

}  // namespace

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) { return a == b || *a == *b; }

void check_compatible(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.field() == b.field()))
    throw Error("field mismatch: " + a.field().name() + " vs " + b.field().name());
  if (!same_quiver(a.quiver_ptr(), b.quiver_ptr())) throw Error("quiver mismatch");
}

AlgebraElement::AlgebraElement(QuiverPtr quiver, Field field, std::size_t trunc)
    : quiver_(std::move(quiver)), field_(field), trunc_(trunc) {
  if (!quiver_) throw Error("algebra element without a quiver");
}

AlgebraElement AlgebraElement::path(QuiverPtr quiver, Field field, std::size_t trunc, const Path& p,
                                    const Scalar& coeff) {
  AlgebraElement r(std::move(quiver), field, trunc);
  make_path(r.quiver(), p.start, p.arrows);
  r.add_term(p, coeff);
  return r;
}

AlgebraElement AlgebraElement::path(QuiverPtr quiver, Field field, std::size_t trunc, const Path& p) {
  return path(std::move(quiver), field, trunc, p, Scalar::one(field));
}

AlgebraElement AlgebraElement::vertex(QuiverPtr quiver, Field field, std::size_t trunc, std::size_t v) {
  return path(std::move(quiver), field, trunc, trivial_path(v));
}

AlgebraElement AlgebraElement::arrow(QuiverPtr quiver, Field field, std::size_t trunc, std::size_t a) {
  const Path p = arrow_path(*quiver, a);
  return path(std::move(quiver), field, trunc, p);
}

AlgebraElement AlgebraElement::unit(QuiverPtr quiver, Field field, std::size_t trunc) {
  AlgebraElement r(quiver, field, trunc);
  for (std::size_t v = 0; v < quiver->vertex_count(); ++v) r.add_term(trivial_path(v), Scalar::one(field));
  return r;
}

void AlgebraElement::add_term(const Path& p, const Scalar& coeff) {
  if (p.length() >= trunc_ || coeff.is_zero()) return;
  if (!(coeff.field() == field_)) throw Error("coefficient field mismatch");
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar AlgebraElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

AlgebraElement AlgebraElement::truncated(std::size_t n) const {
  AlgebraElement r(quiver_, field_, std::min(n, trunc_));
  for (const auto& [p, c] : terms_)
    if (p.length() < r.trunc_) r.terms_.emplace(p, c);
  return r;
}

AlgebraElement AlgebraElement::block(std::size_t from, std::size_t to) const {
  AlgebraElement r(quiver_, field_, trunc_);
  for (const auto& [p, c] : terms_)
    if (p.start == from && path_end(*quiver_, p) == to) r.terms_.emplace(p, c);
  return r;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_compatible(*this, o);
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (!(c.field() == field_)) throw Error("scalar field mismatch");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  check_compatible(a, b);
  AlgebraElement r(a.quiver_ptr(), a.field(), std::min(a.trunc(), b.trunc()));
  const Quiver& q = a.quiver();
  for (const auto& [p, c] : a.terms()) {
    const std::size_t end = path_end(q, p);
    for (const auto& [s, d] : b.terms()) {
      if (s.start != end || p.length() + s.length() >= r.trunc()) continue;
      r.add_term(concat(p, s), c * d);
    }
  }
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return field_ == o.field_ && trunc_ == o.trunc_ && same_quiver(quiver_, o.quiver_) && terms_ == o.terms_;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    std::string coeff = c.to_string();
    const bool neg = field_.is_rational() && coeff.front() == '-';
    if (neg) coeff.erase(0, 1);
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    first = false;
    if (coeff != "1") s += coeff + "*";
    s += path_to_string(*quiver_, p);
  }
  return s + " (mod m^" + std::to_string(trunc_) + ")";
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; }

AlgebraElement sigma(const AlgebraElement& a) {
  AlgebraElement r(a.quiver_ptr(), a.field(), a.trunc());
  const Quiver& q = a.quiver();
  for (const auto& [p, c] : a.terms()) {
    if (!is_cycle(q, p)) continue;
    if (p.is_trivial()) {
      r.add_term(p, c);
      continue;
    }
    r.add_term(rotate_to(p, p.length() - 1, q), c);
  }
  return r;
}

AlgebraElement norm_map(const AlgebraElement& a) {
  AlgebraElement r(a.quiver_ptr(), a.field(), a.trunc());
  const Quiver& q = a.quiver();
  for (const auto& [p, c] : a.terms()) {
    if (p.is_trivial() || !is_cycle(q, p)) continue;
    for (std::size_t j = 0; j < p.length(); ++j) r.add_term(rotate_to(p, j, q), c);
  }
  return r;
}

AlgebraElement cyclic_derivative(const AlgebraElement& a, std::size_t arrow) {
  const Quiver& q = a.quiver();
  if (arrow >= q.arrow_count()) throw Error("unknown arrow index " + std::to_string(arrow));
  AlgebraElement r(a.quiver_ptr(), a.field(), minus_one(a.trunc()));
  for (const auto& [p, c] : a.terms()) {
    if (!is_cycle(q, p))
      throw Error("potential expected: term " + path_to_string(q, p) + " is not a cycle");
    const std::size_t n = p.length();
    for (std::size_t j = 0; j < n; ++j) {
      if (p.arrows[j] != arrow) continue;
      Path rest{q.target(arrow), {}};
      for (std::size_t k = 1; k < n; ++k) rest.arrows.push_back(p.arrows[(j + k) % n]);
      r.add_term(rest, c);
    }
  }
  return r;
}

void Tensor::add_term(const Path& left, const Path& right, const Scalar& c) {
  if (left.length() + right.length() >= trunc || c.is_zero()) return;
  auto key = std::make_pair(left, right);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Tensor double_derivation(const AlgebraElement& a, std::size_t arrow) {
  const Quiver& q = a.quiver();
  if (arrow >= q.arrow_count()) throw Error("unknown arrow index " + std::to_string(arrow));
  Tensor t{a.quiver_ptr(), a.field(), minus_one(a.trunc()), {}};
  for (const auto& [p, c] : a.terms()) {
    for (std::size_t j = 0; j < p.length(); ++j) {
      if (p.arrows[j] != arrow) continue;
      Path left{p.start, std::vector<std::size_t>(p.arrows.begin(), p.arrows.begin() + j)};
      Path right{q.target(arrow), std::vector<std::size_t>(p.arrows.begin() + j + 1, p.arrows.end())};
      t.add_term(left, right, c);
    }
  }
  return t;
}

AlgebraElement diamond(const Tensor& t, const AlgebraElement& y) {
  if (!(t.field == y.field())) throw Error("field mismatch in diamond");
  if (!same_quiver(t.quiver, y.quiver_ptr())) throw Error("quiver mismatch in diamond");
  const Quiver& q = y.quiver();
  AlgebraElement r(y.quiver_ptr(), y.field(), std::min(t.trunc, y.trunc()));
  for (const auto& [lr, c] : t.terms) {
    const auto& [left, right] = lr;
    // right * y * left
    const std::size_t right_end = path_end(q, right);
    for (const auto& [s, d] : y.terms()) {
      if (s.start != right_end || path_end(q, s) != left.start) continue;
      if (right.length() + s.length() + left.length() >= r.trunc()) continue;
      r.add_term(concat(concat(right, s), left), c * d);
    }
  }
  return r;
}

Substitution::Substitution(QuiverPtr source, QuiverPtr target, std::vector<AlgebraElement> images)
    : source_(std::move(source)), target_(std::move(target)), field_(Field::rationals()), trunc_(0),
      images_(std::move(images)) {
  if (source_->vertices() != target_->vertices())
    throw Error("substitution: source and target quivers must share the vertex set");
  if (images_.size() != source_->arrow_count())
    throw Error("substitution: expected one image per source arrow");
  for (std::size_t v = 0; v < source_->vertex_count(); ++v)
    vertex_map_.push_back(target_->vertex_index(source_->vertex_id(v)));
  if (images_.empty()) {
    trunc_ = static_cast<std::size_t>(-1) / 4;
    return;
  }
  field_ = images_.front().field();
  trunc_ = images_.front().trunc();
  for (std::size_t a = 0; a < images_.size(); ++a) {
    const AlgebraElement& img = images_[a];
    const std::string& id = source_->arrow(a).id;
    if (!same_quiver(img.quiver_ptr(), target_)) throw Error("substitution: image of '" + id + "' over wrong quiver");
    if (!(img.field() == field_)) throw Error("substitution: mixed fields");
    trunc_ = std::min(trunc_, img.trunc());
    const std::size_t s = vertex_map_[source_->source(a)];
    const std::size_t t = vertex_map_[source_->target(a)];
    for (const auto& [p, c] : img.terms()) {
      if (p.start != s || path_end(*target_, p) != t)
        throw Error("substitution: image of '" + id + "' has term " + path_to_string(*target_, p) +
                    " outside the block " + source_->arrow(a).from + " -> " + source_->arrow(a).to);
      if (p.is_trivial())
        throw Error("substitution: image of '" + id + "' has a constant term (map not continuous)");
    }
  }
}

Substitution Substitution::identity(QuiverPtr q, Field field, std::size_t trunc) {
  std::vector<AlgebraElement> images;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) images.push_back(AlgebraElement::arrow(q, field, trunc, a));
  return Substitution(q, q, std::move(images));
}

bool Substitution::linear_part_invertible() const {
  if (source_->arrow_count() != target_->arrow_count()) return false;
  Echelon e(field_);
  for (const AlgebraElement& img : images_) {
    SparseVec row;
    for (const auto& [p, c] : img.terms())
      if (p.length() == 1) row.emplace(p.arrows[0], c);
    e.insert(row);
  }
  return e.rank() == source_->arrow_count();
}

AlgebraElement apply_substitution(const Substitution& phi, const AlgebraElement& a) {
  if (!same_quiver(a.quiver_ptr(), phi.source())) throw Error("substitution applied to element over another quiver");
  if (!(a.field() == phi.field()) && phi.source()->arrow_count() > 0)
    throw Error("substitution field mismatch");
  const std::size_t n = std::min(a.trunc(), phi.trunc());
  AlgebraElement r(phi.target(), a.field(), n);
  for (const auto& [p, c] : a.terms()) {
    if (p.length() >= n) continue;
    AlgebraElement prod = AlgebraElement::vertex(phi.target(), a.field(), n, phi.map_vertex(p.start));
    for (std::size_t arrow : p.arrows) {
      prod = prod * phi.image(arrow).truncated(n);
      if (prod.is_zero()) break;
    }
    r += prod * c;
  }
  return r;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  if (!same_quiver(inner.target(), outer.source())) throw Error("substitutions are not composable");
  std::vector<AlgebraElement> images;
  for (const AlgebraElement& img : inner.images()) images.push_back(apply_substitution(outer, img));
  return Substitution(inner.source(), outer.target(), std::move(images));
}

}  // namespace quiverforge
