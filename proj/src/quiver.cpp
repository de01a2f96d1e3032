#include "quiverforge/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quiverforge/error.hpp"

namespace quiverforge {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (vertices[i] == vertices[i + 1]) throw Error("duplicate vertex '" + vertices[i] + "'");
  std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (arrows[i].id == arrows[i + 1].id) throw Error("duplicate arrow '" + arrows[i].id + "'");

  vertices_ = std::move(vertices);
  arrows_ = std::move(arrows);
  for (std::size_t v = 0; v < vertices_.size(); ++v) vertex_index_.emplace(vertices_[v], v);
  out_.assign(vertices_.size(), {});
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& arr = arrows_[a];
    auto s = vertex_index_.find(arr.from);
    auto t = vertex_index_.find(arr.to);
    if (s == vertex_index_.end() || t == vertex_index_.end())
      throw Error("arrow '" + arr.id + "' uses an unknown vertex");
    arrow_index_.emplace(arr.id, a);
    src_.push_back(s->second);
    tgt_.push_back(t->second);
    out_[s->second].push_back(a);
  }
}

std::size_t Quiver::vertex_index(std::string_view id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw Error("unknown vertex '" + std::string(id) + "'");
  return it->second;
}

std::size_t Quiver::arrow_index(std::string_view id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) throw Error("unknown arrow '" + std::string(id) + "'");
  return it->second;
}

Path trivial_path(std::size_t vertex) { return Path{vertex, {}}; }

Path arrow_path(const Quiver& q, std::size_t arrow) {
  if (arrow >= q.arrow_count()) throw Error("unknown arrow index " + std::to_string(arrow));
  return Path{q.source(arrow), {arrow}};
}

Path make_path(const Quiver& q, std::size_t start, std::vector<std::size_t> arrows) {
  if (start >= q.vertex_count()) throw Error("unknown vertex index " + std::to_string(start));
  std::size_t at = start;
  for (std::size_t a : arrows) {
    if (a >= q.arrow_count()) throw Error("unknown arrow index " + std::to_string(a));
    if (q.source(a) != at)
      throw Error("arrow '" + q.arrow(a).id + "' does not start at vertex '" + q.vertex_id(at) + "'");
    at = q.target(a);
  }
  return Path{start, std::move(arrows)};
}

Path make_path(const Quiver& q, std::string_view start, const std::vector<std::string>& arrow_ids) {
  std::vector<std::size_t> arrows;
  arrows.reserve(arrow_ids.size());
  for (const auto& id : arrow_ids) arrows.push_back(q.arrow_index(id));
  return make_path(q, q.vertex_index(start), std::move(arrows));
}

std::size_t path_end(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.start : q.target(p.arrows.back());
}

bool is_cycle(const Quiver& q, const Path& p) { return path_end(q, p) == p.start; }

std::optional<Path> compose(const Quiver& q, const Path& a, const Path& b) {
  for (std::size_t x : a.arrows)
    if (x >= q.arrow_count()) throw Error("unknown arrow index " + std::to_string(x));
  for (std::size_t x : b.arrows)
    if (x >= q.arrow_count()) throw Error("unknown arrow index " + std::to_string(x));
  if (path_end(q, a) != b.start) return std::nullopt;
  Path r{a.start, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::string_view from, std::string_view to,
                                  std::size_t max_len) {
  const std::size_t s = q.vertex_index(from);
  const std::size_t t = q.vertex_index(to);
  std::vector<Path> result;
  std::vector<Path> layer{trivial_path(s)};
  for (std::size_t len = 0; len < max_len && !layer.empty(); ++len) {
    for (const Path& p : layer)
      if (path_end(q, p) == t) result.push_back(p);
    std::vector<Path> next;
    for (const Path& p : layer)
      for (std::size_t a : q.arrows_from(path_end(q, p))) {
        Path e = p;
        e.arrows.push_back(a);
        next.push_back(std::move(e));
      }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return result;
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t length) {
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) layer.push_back(trivial_path(v));
  for (std::size_t len = 0; len < length; ++len) {
    std::vector<Path> next;
    for (const Path& p : layer)
      for (std::size_t a : q.arrows_from(path_end(q, p))) {
        Path e = p;
        e.arrows.push_back(a);
        next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertex_id(p.start);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrow(p.arrows[i]).id;
  }
  return s;
}

Quiver quiver_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error("quiver document: expected an object at /");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error("quiver document: missing array /vertices");
  if (!doc.contains("arrows") || !doc["arrows"].is_array())
    throw Error("quiver document: missing array /arrows");

  std::vector<std::string> vertices;
  std::set<std::string> seen_v;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    if (!v.is_string()) throw Error("quiver document: /vertices/" + std::to_string(i) + " is not a string");
    if (!seen_v.insert(v.get<std::string>()).second)
      throw Error("duplicate vertex '" + v.get<std::string>() + "' at /vertices/" + std::to_string(i));
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Arrow> arrows;
  std::set<std::string> seen_a;
  for (std::size_t i = 0; i < doc["arrows"].size(); ++i) {
    const auto& a = doc["arrows"][i];
    const std::string where = "/arrows/" + std::to_string(i);
    if (!a.is_object() || !a.contains("id") || !a.contains("from") || !a.contains("to") ||
        !a["id"].is_string() || !a["from"].is_string() || !a["to"].is_string())
      throw Error("quiver document: " + where + " must have string fields id, from, to");
    Arrow arr{a["id"].get<std::string>(), a["from"].get<std::string>(), a["to"].get<std::string>()};
    if (!seen_a.insert(arr.id).second) throw Error("duplicate arrow '" + arr.id + "' at " + where);
    if (!seen_v.count(arr.from) || !seen_v.count(arr.to))
      throw Error("quiver document: " + where + " uses an unknown vertex");
    arrows.push_back(std::move(arr));
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

nlohmann::json quiver_to_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

Quiver parse_quiver_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed quiver document: ") + e.what());
  }
  return quiver_from_json(doc);
}

std::string emit_quiver_json(const Quiver& q) { return quiver_to_json(q).dump(); }

std::string emit_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph Q {\n";
  for (const auto& v : q.vertices()) out << "  \"" << v << "\";\n";
  for (const Arrow& a : q.arrows())
    out << "  \"" << a.from << "\" -> \"" << a.to << "\" [label=\"" << a.id << "\"];\n";
  out << "}\n";
  return out.str();
}

Quiver cycle_quiver(std::size_t m) {
  if (m == 0) throw Error("cycle quiver needs at least one vertex");
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i <= m; ++i) {
    vertices.push_back(std::to_string(i));
    arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i % m + 1)});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

Quiver loop_quiver() { return Quiver({"1"}, {{"b", "1", "1"}}); }

}  // namespace quiverforge
