#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace quiverforge {

struct Arrow {
  std::string id;
  std::string from;
  std::string to;
  bool operator==(const Arrow&) const = default;
};

// Finite quiver with string ids. Vertices and arrows are kept sorted by id, so
// vertex and arrow indices follow the lexicographic order of their ids and
// every ordering derived from indices is deterministic.
//
// Paths compose LEFT TO RIGHT: in a1 a2 ... an the target of a_j is the source
// of a_{j+1}. A path a1...an walks from source(a1) to target(an).
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  std::size_t vertex_index(std::string_view id) const;
  std::size_t arrow_index(std::string_view id) const;
  bool has_arrow(std::string_view id) const { return arrow_index_.count(std::string(id)) != 0; }

  std::size_t source(std::size_t a) const { return src_.at(a); }
  std::size_t target(std::size_t a) const { return tgt_.at(a); }
  const std::vector<std::size_t>& arrows_from(std::size_t v) const { return out_.at(v); }

  bool operator==(const Quiver& o) const {
    return vertices_ == o.vertices_ && arrows_ == o.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> src_, tgt_;
  std::vector<std::vector<std::size_t>> out_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_, arrow_index_;
};

// A path: start vertex plus arrow indices. The empty arrow list is the trivial
// path e_start. Ordered length-then-lex (arrow ids), ties broken by start.
struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  std::strong_ordering operator<=>(const Path& o) const {
    if (auto c = arrows.size() <=> o.arrows.size(); c != 0) return c;
    if (auto c = arrows <=> o.arrows; c != 0) return c;
    return start <=> o.start;
  }
  bool operator==(const Path&) const = default;
};

Path trivial_path(std::size_t vertex);
Path arrow_path(const Quiver& q, std::size_t arrow);
// Validates composability; throws on unknown or non-composable arrows.
Path make_path(const Quiver& q, std::size_t start, std::vector<std::size_t> arrows);
Path make_path(const Quiver& q, std::string_view start, const std::vector<std::string>& arrow_ids);

std::size_t path_end(const Quiver& q, const Path& p);
bool is_cycle(const Quiver& q, const Path& p);

// Concatenation p then q, or nullopt when end(p) != start(q).
std::optional<Path> compose(const Quiver& q, const Path& a, const Path& b);

// All paths from -> to of length < max_len, length-then-lex ordered.
std::vector<Path> enumerate_paths(const Quiver& q, std::string_view from, std::string_view to,
                                  std::size_t max_len);
// All paths of exactly the given length (any endpoints), ordered.
std::vector<Path> paths_of_length(const Quiver& q, std::size_t length);

// "e_1" for trivial paths, "a1*a2*a3" otherwise.
std::string path_to_string(const Quiver& q, const Path& p);

// {"vertices": [...], "arrows": [{"id","from","to"}, ...]}
Quiver quiver_from_json(const nlohmann::json& doc);
nlohmann::json quiver_to_json(const Quiver& q);
Quiver parse_quiver_json(std::string_view text);
std::string emit_quiver_json(const Quiver& q);
std::string emit_dot(const Quiver& q);

// Convenience constructors for the quivers used throughout.
// Cycle Q_m: vertices "1".."m", arrows "a1".."am" with a_i: i -> i+1 (mod m).
Quiver cycle_quiver(std::size_t m);
// One vertex "1" with a single loop "b".
Quiver loop_quiver();

}  // namespace quiverforge
