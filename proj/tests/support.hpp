#pragma once

#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quiverforge/path_algebra.hpp"

namespace testing {

using namespace quiverforge;

inline const Field kQ = Field::rationals();
inline const Field kGF2 = Field::prime(2);
inline const Field kGF3 = Field::prime(3);
inline const Field kGF5 = Field::prime(5);

inline QuiverPtr q4() { return share(cycle_quiver(4)); }
inline QuiverPtr loop() { return share(loop_quiver()); }

// "a1 a2 a3" (arrow ids separated by blanks) or "e_<vertex>".
inline Path word(const Quiver& q, const std::string& text) {
  if (text.rfind("e_", 0) == 0) return trivial_path(q.vertex_index(text.substr(2)));
  std::istringstream in(text);
  std::vector<std::string> ids;
  for (std::string id; in >> id;) ids.push_back(id);
  return make_path(q, q.arrow(q.arrow_index(ids.front())).from, ids);
}

inline AlgebraElement elem(const QuiverPtr& q, const Field& f, std::size_t n,
                           const std::vector<std::pair<std::string, std::string>>& terms) {
  AlgebraElement x(q, f, n);
  for (const auto& [c, w] : terms) x.add_term(word(*q, w), Scalar::parse(f, c));
  return x;
}

// The power of a word, as a space separated arrow list.
inline std::string repeat(const std::string& w, std::size_t k) {
  std::string out;
  for (std::size_t j = 0; j < k; ++j) out += (j ? " " : "") + w;
  return out;
}

inline Scalar random_scalar(std::mt19937_64& rng, const Field& f) {
  std::uniform_int_distribution<long> d(-3, 3);
  if (f.is_rational() && rng() % 4 == 0) {
    std::uniform_int_distribution<long> den(1, 3);
    return Scalar(f, mpq_class(d(rng), den(rng)));
  }
  return Scalar(f, d(rng));
}

// Random combination of paths of length in [min_len, max_len] from `from` to
// `to` (any endpoints when negative).
inline AlgebraElement random_element(std::mt19937_64& rng, const QuiverPtr& q, const Field& f, std::size_t n,
                                     std::size_t min_len, std::size_t max_len, int from = -1, int to = -1,
                                     std::size_t terms = 4) {
  AlgebraElement x(q, f, n);
  std::vector<Path> pool;
  for (std::size_t len = min_len; len <= max_len && len < n; ++len)
    for (const Path& p : paths_of_length(*q, len))
      if ((from < 0 || p.start == static_cast<std::size_t>(from)) &&
          (to < 0 || path_end(*q, p) == static_cast<std::size_t>(to)))
        pool.push_back(p);
  if (pool.empty()) return x;
  for (std::size_t k = 0; k < terms; ++k) x.add_term(pool[rng() % pool.size()], random_scalar(rng, f));
  return x;
}

}  // namespace testing
