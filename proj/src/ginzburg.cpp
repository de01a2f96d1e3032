#include "quiverforge/ginzburg.hpp"

#include <sstream>

#include "quiverforge/error.hpp"

namespace quiverforge {

GradedQuiver make_graded_quiver(const QuiverPtr& q) {
  std::vector<Arrow> arrows = q->arrows();
  for (const Arrow& a : q->arrows()) arrows.push_back({a.id + "*", a.to, a.from});
  for (const std::string& v : q->vertices()) arrows.push_back({"t_" + v, v, v});
  GradedQuiver g;
  g.base = q;
  try {
    g.graded = share(Quiver(q->vertices(), arrows));
  } catch (const Error& e) {
    throw Error(std::string("graded quiver: arrow names clash with generated names (") + e.what() + ")");
  }
  const Quiver& gq = *g.graded;
  g.degree.assign(gq.arrow_count(), 0);
  for (const Arrow& a : q->arrows()) {
    g.embed.push_back(gq.arrow_index(a.id));
    g.star.push_back(gq.arrow_index(a.id + "*"));
    g.degree[g.star.back()] = -1;
  }
  for (const std::string& v : q->vertices()) {
    g.loop.push_back(gq.arrow_index("t_" + v));
    g.degree[g.loop.back()] = -2;
  }
  return g;
}

int path_degree(const GradedQuiver& g, const Path& p) {
  int d = 0;
  for (std::size_t a : p.arrows) d += g.degree.at(a);
  return d;
}

AlgebraElement embed_element(const GradedQuiver& g, const AlgebraElement& x) {
  if (!same_quiver(x.quiver_ptr(), g.base)) throw Error("embed_element: element over another quiver");
  AlgebraElement r(g.graded, x.field(), x.trunc());
  for (const auto& [p, c] : x.terms()) {
    Path e{p.start, {}};
    for (std::size_t a : p.arrows) e.arrows.push_back(g.embed[a]);
    r.add_term(e, c);
  }
  return r;
}

DgPresentation build_ginzburg(const Hyperpotential& h) {
  DgPresentation g{make_graded_quiver(h.quiver_ptr()), h.field(), h.trunc(), {}};
  const QuiverPtr& gq = g.quiver.graded;
  g.d.assign(gq->arrow_count(), AlgebraElement(gq, h.field(), h.trunc()));
  for (std::size_t a = 0; a < h.quiver().arrow_count(); ++a) g.d[g.quiver.star[a]] = embed_element(g.quiver, h.rho(a));

  AlgebraElement comm(gq, h.field(), h.trunc());
  for (std::size_t a = 0; a < h.quiver().arrow_count(); ++a)
    comm += commutator(AlgebraElement::arrow(gq, h.field(), h.trunc(), g.quiver.embed[a]),
                       AlgebraElement::arrow(gq, h.field(), h.trunc(), g.quiver.star[a]));
  for (std::size_t v = 0; v < h.quiver().vertex_count(); ++v) g.d[g.quiver.loop[v]] = comm.block(v, v);
  return g;
}

AlgebraElement apply_d(const DgPresentation& g, const AlgebraElement& x) {
  const QuiverPtr& gq = g.quiver.graded;
  if (!same_quiver(x.quiver_ptr(), gq)) throw Error("apply_d: element over another quiver");
  AlgebraElement r(gq, g.field, std::min(g.trunc, x.trunc()));
  for (const auto& [p, c] : x.terms()) {
    int deg = 0;
    for (std::size_t j = 0; j < p.arrows.size(); ++j) {
      const std::size_t a = p.arrows[j];
      const AlgebraElement& da = g.d.at(a);
      if (!da.is_zero()) {
        Path prefix{p.start, std::vector<std::size_t>(p.arrows.begin(), p.arrows.begin() + j)};
        Path suffix{gq->target(a), std::vector<std::size_t>(p.arrows.begin() + j + 1, p.arrows.end())};
        Scalar sign = (deg % 2 == 0) ? c : -c;
        r += AlgebraElement::path(gq, g.field, r.trunc(), prefix, sign) * da *
             AlgebraElement::path(gq, g.field, r.trunc(), suffix);
      }
      deg += g.quiver.degree[a];
    }
  }
  return r;
}

DSquaredReport check_d_squared(const DgPresentation& g) {
  DSquaredReport rep;
  for (std::size_t a = 0; a < g.d.size(); ++a) {
    AlgebraElement dd = apply_d(g, g.d[a]);
    if (!dd.is_zero()) rep.failures.emplace_back(a, std::move(dd));
  }
  rep.ok = rep.failures.empty();
  return rep;
}

ScalingMorphism scaling_isomorphism(const Hyperpotential& h, const Scalar& c) {
  if (c.is_zero()) throw Error("scaling isomorphism needs a unit c (got 0)");
  ScalingMorphism m{build_ginzburg(h.scaled(c)), build_ginzburg(h), {}, false};
  const GradedQuiver& gq = m.target.quiver;
  const std::size_t n = h.trunc();
  for (std::size_t a = 0; a < gq.graded->arrow_count(); ++a) {
    AlgebraElement img = AlgebraElement::arrow(gq.graded, h.field(), n, a);
    if (gq.degree[a] != 0) img *= c;
    m.images.push_back(std::move(img));
  }
  Substitution phi(gq.graded, gq.graded, m.images);
  m.commutes = true;
  for (std::size_t a = 0; a < m.images.size(); ++a) {
    AlgebraElement lhs = apply_substitution(phi, m.source.d[a]);
    AlgebraElement rhs = apply_d(m.target, m.images[a]);
    const std::size_t t = std::min(lhs.trunc(), rhs.trunc());
    if (!(lhs.truncated(t) == rhs.truncated(t))) m.commutes = false;
  }
  return m;
}

nlohmann::json presentation_to_json(const DgPresentation& g) {
  const Quiver& q = *g.quiver.graded;
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    gens.push_back({{"generator", q.arrow(a).id},
                    {"degree", g.quiver.degree[a]},
                    {"from", q.arrow(a).from},
                    {"to", q.arrow(a).to},
                    {"d", g.d[a].to_string()}});
  return {{"field", g.field.name()}, {"trunc", g.trunc}, {"generators", gens}};
}

std::string emit_graded_dot(const GradedQuiver& g) {
  const Quiver& q = *g.graded;
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& v : q.vertices()) out << "  \"" << v << "\";\n";
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    out << "  \"" << q.arrow(a).from << "\" -> \"" << q.arrow(a).to << "\" [label=\"" << q.arrow(a).id << " ("
        << g.degree[a] << ")\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace quiverforge
