#pragma once

#include "adjideal/numeric.hpp"
#include "adjideal/resolution.hpp"
#include "adjideal/scene.hpp"
#include "adjideal/snc.hpp"

#include <json.hpp>

#include <string>

namespace adjideal::io {

using nlohmann::json;

// Readers throw input_error("schema", "<json-pointer>: <what>").
Rational rational_from_json(const json& j, const std::string& path = "");
Exponent exponent_from_json(const json& j, const std::string& path = "");
MonomialIdeal ideal_from_json(const json& j, int dim, const std::string& path = "");
Potential potential_from_json(const json& j, int dim, const std::string& path = "");
Scene scene_from_json(const json& j);
ResolutionCertificate certificate_from_json(const json& j);
SncData snc_from_json(const json& j);
std::vector<ResidueInput> residue_inputs_from_json(const json& j, const std::string& path = "");

json to_json(const Rational& q);
json to_json(const Exponent& a);
json to_json(const MonomialIdeal& i);
json to_json(const TwistedIdeal& t);
json to_json(const Potential& p);
json to_json(const Scene& s);
json to_json(const ResolutionCertificate& c);
json to_json(const SncData& d);
json to_json(const QDivisor& d);
json to_json(const ResidueDatum& r);
json to_json(const Estimate& e);

json parse_text(const std::string& text, const std::string& origin);
json read_file(const std::string& path);

// FNV-1a over the canonical dump, as 16 hex digits.
std::string certificate_hash(const ResolutionCertificate& c);

}  // namespace adjideal::io
