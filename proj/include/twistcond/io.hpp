#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "twistcond/counting.hpp"
#include "twistcond/oracle.hpp"
#include "twistcond/reps.hpp"

namespace twistcond::io {

using Json = nlohmann::ordered_json;

/// Malformed input text: bad JSON syntax, wrong types, missing or unknown keys.
/// Semantic problems (invariant violations) raise ValidationError instead.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json parse_text(const std::string& text);

LocalFieldParams field_from_json(const Json& j);
Json to_json(const LocalFieldParams& field);

/// {"conductor": k, "exponents": [...]}; exponents are relative to the
/// invariant factors [q-1, p^(k-1) x f] and must describe a character of
/// conductor exactly k. For f = 1 a one-element list is read as an exponent
/// on the cyclic group of order (p-1)p^(k-1).
CharacterX character_from_json(const LocalFieldParams& field, const Json& j);
Json to_json(const CharacterX& chi);

/// {"field": {...}, "components": [{"n", "label", "a_min", "mu", "omega_min"}]}.
Representation representation_from_json(const Json& j);
Json to_json(const Representation& pi);

Json to_json(const Representation& pi, const CharacterX& chi, const TwistBreakdown& breakdown);
std::string to_csv(const Representation& pi, const TwistBreakdown& breakdown);

Json to_json(const CountReport& report);
Json to_json(const InterferenceStatus& status);

Json to_json(const oracle::Histogram& histogram);
std::string to_csv(const oracle::Histogram& histogram);

Json to_json(const oracle::VerificationReport& report);
std::string to_csv(const oracle::VerificationReport& report);

/// Every key optional; missing keys keep the defaults of oracle::default_config().
oracle::GridConfig grid_config_from_json(const Json& j);

/// RFC 4180 quoting for a single CSV field.
std::string csv_field(const std::string& value);

} // namespace twistcond::io
