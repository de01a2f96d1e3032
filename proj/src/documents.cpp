#include "quiverforge/documents.hpp"

#include "quiverforge/error.hpp"

namespace quiverforge {

namespace {

const nlohmann::json& require(const nlohmann::json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) throw Error("missing " + where + "/" + key);
  return doc[key];
}

Field field_of(const nlohmann::json& doc) {
  if (!doc.contains("field")) return Field::rationals();
  if (!doc["field"].is_string()) throw Error("/field must be a string");
  return Field::parse(doc["field"].get<std::string>());
}

std::size_t trunc_of(const nlohmann::json& doc) {
  const auto& t = require(doc, "trunc", "");
  if (!t.is_number_unsigned()) throw Error("/trunc must be a nonnegative integer");
  return t.get<std::size_t>();
}

std::string coeff_text(const nlohmann::json& c, const std::string& where) {
  if (c.is_string()) return c.get<std::string>();
  if (c.is_number_integer()) return std::to_string(c.get<long long>());
  throw Error(where + "/coeff must be a string or an integer");
}

}  // namespace

nlohmann::json terms_to_json(const AlgebraElement& x) {
  const Quiver& q = x.quiver();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : x.terms()) {
    nlohmann::json ids = nlohmann::json::array();
    for (std::size_t a : p.arrows) ids.push_back(q.arrow(a).id);
    terms.push_back({{"coeff", c.to_string()}, {"start", q.vertex_id(p.start)}, {"path", ids}});
  }
  return terms;
}

nlohmann::json element_to_json(const AlgebraElement& x) {
  return {{"field", x.field().name()}, {"trunc", x.trunc()}, {"terms", terms_to_json(x)}};
}

AlgebraElement terms_from_json(const QuiverPtr& q, const Field& field, std::size_t trunc, const nlohmann::json& terms,
                               const std::string& where) {
  if (!terms.is_array()) throw Error(where + " must be an array of terms");
  AlgebraElement x(q, field, trunc);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    const auto& t = terms[k];
    if (!t.is_object()) throw Error(at + " must be an object");
    Scalar c = Scalar::zero(field);
    try {
      c = Scalar::parse(field, coeff_text(require(t, "coeff", at), at));
    } catch (const Error& e) {
      const std::string msg = e.what();
      if (msg.rfind(at, 0) == 0) throw;
      throw Error(at + "/coeff: " + msg);
    }
    const auto& path = require(t, "path", at);
    if (!path.is_array()) throw Error(at + "/path must be an array of arrow ids");
    std::vector<std::string> ids;
    for (const auto& a : path) {
      if (!a.is_string()) throw Error(at + "/path must contain arrow ids");
      ids.push_back(a.get<std::string>());
    }
    std::string start;
    if (t.contains("start")) {
      if (!t["start"].is_string()) throw Error(at + "/start must be a vertex id");
      start = t["start"].get<std::string>();
    } else if (!ids.empty()) {
      if (!q->has_arrow(ids.front())) throw Error(at + "/path: unknown arrow '" + ids.front() + "'");
      start = q->arrow(q->arrow_index(ids.front())).from;
    } else {
      throw Error(at + ": a trivial path needs /start");
    }
    try {
      x.add_term(make_path(*q, start, ids), c);
    } catch (const Error& e) {
      throw Error(at + "/path: " + e.what());
    }
  }
  return x;
}

AlgebraElement element_from_json(const QuiverPtr& q, const nlohmann::json& doc) {
  return terms_from_json(q, field_of(doc), trunc_of(doc), require(doc, "terms", ""), "/terms");
}

nlohmann::json hyperpotential_to_json(const Hyperpotential& h) {
  nlohmann::json rho = nlohmann::json::object();
  for (std::size_t a = 0; a < h.quiver().arrow_count(); ++a) rho[h.quiver().arrow(a).id] = terms_to_json(h.rho(a));
  return {{"quiver", quiver_to_json(h.quiver())}, {"field", h.field().name()}, {"trunc", h.trunc()}, {"rho", rho}};
}

Hyperpotential hyperpotential_from_json(const nlohmann::json& doc) {
  const QuiverPtr q = share(quiver_from_json(require(doc, "quiver", "")));
  const Field f = field_of(doc);
  const std::size_t n = trunc_of(doc);
  const auto& rho = require(doc, "rho", "");
  if (!rho.is_object()) throw Error("/rho must be an object keyed by arrow id");
  for (const auto& [id, terms] : rho.items())
    if (!q->has_arrow(id)) throw Error("/rho/" + id + ": unknown arrow");
  std::vector<AlgebraElement> r;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    const std::string& id = q->arrow(a).id;
    r.push_back(rho.contains(id) ? terms_from_json(q, f, n, rho[id], "/rho/" + id) : AlgebraElement(q, f, n));
  }
  return Hyperpotential(q, f, n, std::move(r));
}

nlohmann::json potential_to_json(const Potential& w) {
  const AlgebraElement& x = w.element();
  return {{"quiver", quiver_to_json(x.quiver())},
          {"field", x.field().name()},
          {"trunc", x.trunc()},
          {"potential", terms_to_json(x)}};
}

Potential potential_from_json(const nlohmann::json& doc) {
  const QuiverPtr q = share(quiver_from_json(require(doc, "quiver", "")));
  return Potential(terms_from_json(q, field_of(doc), trunc_of(doc), require(doc, "potential", ""), "/potential"));
}

nlohmann::json substitution_to_json(const Substitution& phi) {
  nlohmann::json images = nlohmann::json::object();
  for (std::size_t a = 0; a < phi.source()->arrow_count(); ++a)
    images[phi.source()->arrow(a).id] = terms_to_json(phi.image(a));
  return {{"source", quiver_to_json(*phi.source())},
          {"target", quiver_to_json(*phi.target())},
          {"field", phi.field().name()},
          {"trunc", phi.trunc()},
          {"images", images}};
}

Substitution substitution_from_json(const nlohmann::json& doc, const QuiverPtr& source,
                                    std::optional<QuiverPtr> target) {
  if (doc.contains("source") && !(quiver_from_json(doc["source"]) == *source))
    throw Error("/source differs from the quiver of the hyperpotential");
  QuiverPtr tgt = source;
  if (target) {
    tgt = *target;
  } else if (doc.contains("target")) {
    Quiver t = quiver_from_json(doc["target"]);
    if (!(t == *source)) tgt = share(std::move(t));
  }
  const Field f = field_of(doc);
  const std::size_t n = trunc_of(doc);
  const auto& images = require(doc, "images", "");
  if (!images.is_object()) throw Error("/images must be an object keyed by arrow id");
  for (const auto& [id, terms] : images.items())
    if (!source->has_arrow(id)) throw Error("/images/" + id + ": unknown arrow");
  std::vector<AlgebraElement> im;
  for (std::size_t a = 0; a < source->arrow_count(); ++a) {
    const std::string& id = source->arrow(a).id;
    if (!images.contains(id)) throw Error("missing /images/" + id);
    im.push_back(terms_from_json(tgt, f, n, images[id], "/images/" + id));
  }
  return Substitution(source, tgt, std::move(im));
}

nlohmann::json report_to_json(const HyperpotentialReport& r) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& [v, x] : r.blocks)
    blocks.push_back({{"vertex", r.residual.quiver().vertex_id(v)}, {"residual", terms_to_json(x)}});
  return {{"ok", r.ok}, {"verified_mod", r.verified_mod}, {"failing_blocks", blocks}};
}

nlohmann::json parse_document(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(what + ": invalid JSON (" + e.what() + ")");
  }
}

}  // namespace quiverforge
