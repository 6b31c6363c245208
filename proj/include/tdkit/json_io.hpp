#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tdkit/generators.hpp"
#include "tdkit/poly.hpp"
#include "tdkit/spectral.hpp"

namespace tdkit {

using Json = nlohmann::json;

/// Malformed JSON input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Rat& r);
/// Accepts "p/q" strings and JSON integers.
Rat rat_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
Json to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json to_json(const ParamSeq& p);
ParamSeq params_from_json(const Json& j);
Json to_json(const ParamSolution& s);

/// {"coeffs": ["p/q", ...]}, index = degree.
Json to_json(const XPoly& f);
XPoly xpoly_from_json(const Json& j);

/// {"terms": {"-2": "1/4", ...}}
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const EigSeq& s);
Json to_json(const ClosedForm& cf);
Json to_json(const FitResult& r);
Json to_json(const HalfParams& h);
Json to_json(const PairReport& r);
Json to_json(const GeneratedPair& g);

} // namespace tdkit
