#pragma once

#include <string>

#include <json.hpp>

#include "tid/bounds.hpp"
#include "tid/chern.hpp"
#include "tid/cone.hpp"
#include "tid/endo.hpp"

// JSON encodings. Integers are JSON numbers while they fit in 64 bits and
// decimal strings beyond; rationals are always strings ("p/q").
namespace tid {

using json = nlohmann::json;

json bigIntToJson(const BigInt& v);
BigInt bigIntFromJson(const json& j);
json rationalToJson(const Rational& v);
Rational rationalFromJson(const json& j);

// {"n": 3, "components": ["x0^2", ...]} with an optional "morphism" tag.
json mapToJson(const ProjectiveMap& f);
ProjectiveMap mapFromJson(const json& j);

// {"n": 3, "h": "x0*x1", "irreducible": false}
json divisorToJson(const Divisor& D);
Divisor divisorFromJson(const json& j);

json evidenceToJson(const Evidence& e);
Evidence evidenceFromJson(const json& j);

void to_json(json& j, const InvarianceReport& r);
void from_json(const json& j, InvarianceReport& r);
void to_json(json& j, const ChernVector& c);
void from_json(const json& j, ChernVector& c);
void to_json(json& j, const TwistPolynomial& t);
void from_json(const json& j, TwistPolynomial& t);
void to_json(json& j, const IdentityCheck& c);
void from_json(const json& j, IdentityCheck& c);
void to_json(json& j, const GapPolynomial& g);
void from_json(const json& j, GapPolynomial& g);
void to_json(json& j, const BoundReport& r);
void from_json(const json& j, BoundReport& r);
void to_json(json& j, const ThresholdResult& t);
void from_json(const json& j, ThresholdResult& t);
void to_json(json& j, const NkValue& v);
void from_json(const json& j, NkValue& v);
void to_json(json& j, const CorollaryReport& r);
void from_json(const json& j, CorollaryReport& r);
void to_json(json& j, const IsolatedVerdict& v);
void from_json(const json& j, IsolatedVerdict& v);
void to_json(json& j, const Hyperplane& H);
void from_json(const json& j, Hyperplane& H);
void to_json(json& j, const ReductionResult& r);
ReductionResult reductionFromJson(const json& j);

// Reads a file, or treats the argument itself as JSON when it starts with '{'.
json loadJsonArgument(const std::string& pathOrInline);

}  // namespace tid
