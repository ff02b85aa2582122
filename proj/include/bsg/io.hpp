#pragma once

#include "bsg/verify.hpp"

#include <json.hpp>

#include <string>

// JSON and DOT serialization. Rationals are strings "p/q" (or "p"), big
// integers are decimal strings. Layouts are documented in FORMATS.md.

namespace bsg::io {

using Json = nlohmann::ordered_json;

std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

Json to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const Json& j);

/// `kind` is recorded when the map came from a named construction.
Json to_json(const PLMap& F, const std::string& kind = "");
PLMap map_from_json(const Json& j);

Json to_json(const BettiProfile& h);
BettiProfile betti_from_json(const Json& j);

Json to_json(const ReebGraph& G);
Json to_json(const ReebNerve& N);
Json to_json(const VertexClassification& c, const SpecialGenericResult& sg);
Json to_json(const Decomposition& D);

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

std::string to_dot(const ReebGraph& G);

/// InvalidInput on a missing file or malformed JSON.
Json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace bsg::io
