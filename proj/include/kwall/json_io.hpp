#pragma once

// Canonical JSON forms. Keys are sorted (nlohmann::json uses std::map),
// rationals are strings "p/q", polynomials in x = q^{1/d} are objects
// {"<x-exponent>": "<coefficient>"}, and every top-level artifact records d.

#include <json.hpp>

#include "kwall/cone.hpp"
#include "kwall/ifunction.hpp"
#include "kwall/wallcross.hpp"

namespace kwall {

using Json = nlohmann::json;

Json to_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json to_json(const PolyX& p);
PolyX poly_from_json(const Json& j);

/// {"d": d, "num": poly, "den": poly}
Json to_json(const RationalFunctionQ& f);
RationalFunctionQ rfq_from_json(const Json& j);

/// {"<k>": RationalFunctionQ, ...}
Json to_json(const KElement& f);
KElement kelement_from_json(const Json& j, int d);

Json to_json(const KDecomposition& dec);

/// {"d", "dmax", "tmin", "tmax", "terms": {"<monomial>": KElement}}
Json to_json(const KSeries& s);
KSeries kseries_from_json(const Json& j);
Json to_json(const ScalarSeries& s);

/// {"d": int, "weights": [...], "name": string?}
FermatModel model_from_json(const Json& j);
Json model_report(const FermatModel& model);

Json to_json(const HypergeometricTerm& t);
Json to_json(const UnstableTerm& t, const FermatModel& model, int r,
             const std::vector<int>& l0);

Json to_json(const TailCoefficient& t);
TailCoefficient tail_coefficient_from_json(const Json& j);
/// {"d", "dmax", "tmin", "tmax", "j_max", "n_max", "coefficients": [...]}
Json tail_to_json(const SolverConfig& cfg, const std::vector<TailCoefficient>& c);
std::vector<TailCoefficient> tail_from_json(const Json& j);

Json to_json(const NoPoleReport& r);
Json to_json(const ConeShapeReport& r);
Json to_json(const ConeVerification& v);

/// {"error": {"kind", "message", "monomial"?}}
Json error_json(const Error& e);

}  // namespace kwall
