#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "quiverforge/hyperpotential.hpp"
#include "quiverforge/path_algebra.hpp"

namespace quiverforge {

// JSON documents exchanged with the command line tool.
//
// Element:         {"field":"Q","trunc":N,"terms":[{"coeff":"3/2","start":"1","path":["a1","a2"]}]}
// Hyperpotential:  {"quiver":{...},"field":"Q","trunc":N,"rho":{"a1":[terms],...}}
//                  arrows missing from "rho" get rho = 0
// Potential:       {"quiver":{...},"field":"Q","trunc":N,"potential":[terms]}
// Substitution:    {"source":{...},"target":{...},"field":"Q","trunc":N,"images":{"a1":[terms],...}}
//                  "target" defaults to "source"
//
// "start" may be omitted for nontrivial paths. Errors name the offending
// JSON pointer.

nlohmann::json terms_to_json(const AlgebraElement& x);
nlohmann::json element_to_json(const AlgebraElement& x);
AlgebraElement terms_from_json(const QuiverPtr& q, const Field& field, std::size_t trunc, const nlohmann::json& terms,
                               const std::string& where);
AlgebraElement element_from_json(const QuiverPtr& q, const nlohmann::json& doc);

nlohmann::json hyperpotential_to_json(const Hyperpotential& h);
Hyperpotential hyperpotential_from_json(const nlohmann::json& doc);

nlohmann::json potential_to_json(const Potential& w);
Potential potential_from_json(const nlohmann::json& doc);

nlohmann::json substitution_to_json(const Substitution& phi);
// When `target` is given it replaces the document's target quiver, which lets
// the result feed a hyperpotential over an already loaded quiver.
Substitution substitution_from_json(const nlohmann::json& doc, const QuiverPtr& source,
                                    std::optional<QuiverPtr> target = std::nullopt);

nlohmann::json report_to_json(const HyperpotentialReport& r);

// Parses text as JSON; syntax errors become Error.
nlohmann::json parse_document(const std::string& text, const std::string& what);

}  // namespace quiverforge
