#include "quiverforge/jacobian.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "quiverforge/error.hpp"
#include "quiverforge/linalg.hpp"

namespace quiverforge {

namespace {

constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max() / 4;

Path concat3(const Path& a, const Path& b, const Path& c) {
  Path r{a.start, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  r.arrows.insert(r.arrows.end(), c.arrows.begin(), c.arrows.end());
  return r;
}

struct Block {
  std::size_t from, to, valuation;
  std::vector<std::pair<Path, Scalar>> terms;
};

std::vector<Block> split_blocks(const Quiver& q, const std::vector<AlgebraElement>& relations) {
  std::vector<Block> out;
  for (const auto& r : relations) {
    std::map<std::pair<std::size_t, std::size_t>, Block> by;
    for (const auto& [p, c] : r.terms()) {
      const auto key = std::make_pair(p.start, path_end(q, p));
      auto it = by.find(key);
      if (it == by.end()) it = by.emplace(key, Block{key.first, key.second, p.length(), {}}).first;
      it->second.valuation = std::min(it->second.valuation, p.length());
      it->second.terms.emplace_back(p, c);
    }
    for (auto& [k, b] : by) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

const std::vector<Path>& QuotientBasis::final_basis() const {
  if (basis.empty()) throw Error("quotient basis: nothing computed");
  return stable_degree ? basis.at(*stable_degree) : basis.back();
}

QuotientBasis quotient_dimensions(const QuiverPtr& q, const Field& field, const std::vector<AlgebraElement>& relations,
                                  std::size_t N) {
  if (N < 2) throw Error("jacobian: truncation N must be at least 2");
  std::size_t known = kExact;
  for (const auto& r : relations) {
    if (!same_quiver(r.quiver_ptr(), q)) throw Error("jacobian: relation over another quiver");
    if (!(r.field() == field)) throw Error("jacobian: relation over another field");
    known = std::min(known, r.trunc());
  }
  const std::size_t dmax = std::min(N, known);
  const std::vector<Block> blocks = split_blocks(*q, relations);

  // all paths of length < dmax, grouped by endpoints
  std::vector<Path> all;
  for (std::size_t len = 0; len < dmax; ++len) {
    std::vector<Path> layer = paths_of_length(*q, len);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  std::vector<std::vector<const Path*>> ending(q->vertex_count()), starting(q->vertex_count());
  for (const Path& p : all) {
    ending[path_end(*q, p)].push_back(&p);
    starting[p.start].push_back(&p);
  }

  QuotientBasis out{q, field, N, {}, {}, false, std::nullopt, std::nullopt};
  for (std::size_t d = 0; d <= dmax; ++d) {
    // Columns run longest path first so that pivots land on long paths and the
    // surviving basis consists of short ones.
    std::map<Path, std::size_t> col;
    std::vector<const Path*> by_col;
    for (const Path& p : all)
      if (p.length() < d) by_col.push_back(&p);
    std::reverse(by_col.begin(), by_col.end());
    for (std::size_t i = 0; i < by_col.size(); ++i) col.emplace(*by_col[i], i);

    Echelon ech(field);
    for (const Block& b : blocks) {
      if (b.valuation >= d) continue;
      for (const Path* p : ending[b.from]) {
        if (p->length() + b.valuation >= d) continue;
        for (const Path* s : starting[b.to]) {
          if (p->length() + b.valuation + s->length() >= d) continue;
          SparseVec v;
          for (const auto& [t, c] : b.terms) {
            if (p->length() + t.length() + s->length() >= d) continue;
            auto [it, fresh] = v.emplace(col.at(concat3(*p, t, *s)), c);
            if (!fresh) {
              it->second += c;
              if (it->second.is_zero()) v.erase(it);
            }
          }
          if (!v.empty()) ech.insert(v);
        }
      }
    }
    std::vector<Path> basis;
    for (std::size_t i = 0; i < by_col.size(); ++i)
      if (!ech.is_pivot(i)) basis.push_back(*by_col[i]);
    std::sort(basis.begin(), basis.end());
    out.dims.push_back(basis.size());
    out.basis.push_back(std::move(basis));
    if (d > 0 && out.dims[d] == out.dims[d - 1]) {
      out.stabilized = true;
      out.stable_degree = d - 1;
      out.dimension = out.dims[d];
      break;
    }
  }
  return out;
}

QuotientBasis jacobian_dimensions(const Hyperpotential& h, std::size_t N) {
  return quotient_dimensions(h.quiver_ptr(), h.field(), h.rhos(), N);
}

QuiverPtr lambda_quiver(std::size_t m) { return share(cycle_quiver(m)); }

namespace {

void check_me(std::size_t m, std::size_t e) {
  if (m == 0 || e == 0 || m * e < 3)
    throw Error("Lambda(m,e) needs m,e >= 1 and me >= 3 (got m=" + std::to_string(m) + ", e=" + std::to_string(e) +
                ")");
}

// Path of the given length on Q_m starting at vertex `from` (1-based).
Path cycle_walk(const Quiver& q, std::size_t m, std::size_t from, std::size_t length) {
  std::vector<std::size_t> arrows;
  std::size_t at = from;
  for (std::size_t k = 0; k < length; ++k) {
    arrows.push_back(q.arrow_index("a" + std::to_string(at)));
    at = at % m + 1;
  }
  return make_path(q, q.vertex_index(std::to_string(from)), std::move(arrows));
}

}  // namespace

QuotientBasis lambda_algebra(std::size_t m, std::size_t e, const Field& field) {
  check_me(m, e);
  const QuiverPtr q = lambda_quiver(m);
  std::vector<AlgebraElement> rel;
  for (std::size_t i = 1; i <= m; ++i)
    rel.push_back(AlgebraElement::path(q, field, kExact, cycle_walk(*q, m, i, m * e - 1)));
  return quotient_dimensions(q, field, rel, m * e + 1);
}

Hyperpotential lambda_hyperpotential(std::size_t m, std::size_t e, const Field& field, std::size_t trunc) {
  check_me(m, e);
  const QuiverPtr q = lambda_quiver(m);
  std::vector<AlgebraElement> rho(m, AlgebraElement(q, field, trunc));
  for (std::size_t i = 1; i <= m; ++i)
    rho[q->arrow_index("a" + std::to_string(i))] =
        AlgebraElement::path(q, field, trunc, cycle_walk(*q, m, i % m + 1, m * e - 1));
  return Hyperpotential(q, field, trunc, std::move(rho));
}

Potential lambda_potential(std::size_t m, std::size_t e, const Field& field, std::size_t trunc) {
  check_me(m, e);
  const QuiverPtr q = lambda_quiver(m);
  return Potential(AlgebraElement::path(q, field, trunc, cycle_walk(*q, m, 1, m * e)));
}

CyclePotentialAnalysis analyze_cycle_potential(std::size_t m, const std::vector<Scalar>& coefficients,
                                               const Field& field, std::optional<std::size_t> known_below) {
  if (m == 0) throw Error("cycle potential: m must be positive");
  CyclePotentialAnalysis out;
  out.m = m;
  for (const Scalar& c : coefficients) {
    if (!(c.field() == field)) throw Error("cycle potential: coefficient over another field");
    out.coefficients.push_back(c);
  }
  const std::size_t known = known_below.value_or(coefficients.size());
  for (std::size_t k = 1; k < out.coefficients.size(); ++k)
    out.derivative.push_back(out.coefficients[k] * Scalar(field, static_cast<long>(k)));
  for (std::size_t j = 0; j < out.derivative.size(); ++j) {
    if (j + 1 >= known) break;
    if (!out.derivative[j].is_zero()) {
      out.verdict = CycleVerdict::Lambda;
      out.d = j + 1;
      if (field.characteristic() != 0 && out.d % field.characteristic() == 0)
        throw InternalError("cycle potential: Lambda degree divisible by the characteristic");
      return out;
    }
  }
  if (known_below)
    throw Error("inconclusive at this truncation: P' vanishes below degree " +
                std::to_string(known == 0 ? 0 : known - 1));
  out.verdict = CycleVerdict::Infinite;
  return out;
}

CycleSeries cycle_series(const Potential& w) {
  const AlgebraElement& el = w.element();
  const Quiver& q = el.quiver();
  const std::size_t m = q.vertex_count();
  if (!(q == cycle_quiver(m))) throw Error("cycle_series: potential must live on the cycle quiver Q_m");
  CycleSeries s;
  s.known_below = (el.trunc() + m - 1) / m;
  s.coefficients.assign(s.known_below, Scalar::zero(el.field()));
  for (const auto& [p, c] : el.terms()) {
    const std::size_t k = p.length() / m;
    if (k >= s.coefficients.size()) s.coefficients.resize(k + 1, Scalar::zero(el.field()));
    s.coefficients[k] += c;
  }
  return s;
}

QuiverPtr g2_quiver() { return share(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "2"}})); }

QuotientBasis g2_algebra(const Field& field) {
  const QuiverPtr q = g2_quiver();
  const std::size_t b = q->arrow_index("b");
  AlgebraElement rel = AlgebraElement::path(q, field, kExact, make_path(*q, q->vertex_index("2"), {b, b, b}));
  return quotient_dimensions(q, field, {rel}, 8);
}

Hyperpotential g2_hyperpotential(const Field& field, std::size_t trunc) {
  const QuiverPtr q = g2_quiver();
  const std::size_t b = q->arrow_index("b");
  std::vector<AlgebraElement> rho(2, AlgebraElement(q, field, trunc));
  rho[b] = AlgebraElement::path(q, field, trunc, make_path(*q, q->vertex_index("2"), {b, b, b}));
  return Hyperpotential(q, field, trunc, std::move(rho));
}

nlohmann::json quotient_to_json(const QuotientBasis& b) {
  nlohmann::json j;
  j["dims"] = b.dims;
  j["stabilized"] = b.stabilized;
  if (b.dimension) j["dimension"] = *b.dimension;
  else j["dimension"] = nullptr;
  nlohmann::json basis = nlohmann::json::array();
  for (const Path& p : b.final_basis()) basis.push_back(path_to_string(*b.quiver, p));
  j["basis"] = basis;
  return j;
}

}  // namespace quiverforge
