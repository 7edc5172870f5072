#pragma once

#include "cardmat/cardinality.hpp"
#include "cardmat/facets.hpp"
#include "cardmat/inequality.hpp"
#include "cardmat/matroid.hpp"
#include "cardmat/separation.hpp"
#include "cardmat/verify.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace cardmat {

using Json = nlohmann::json;

// All numerics on the wire are rational strings; subsets are sorted
// element-index arrays. Malformed documents throw Error("parse-error").

MatroidInstance matroid_from_json(const Json& j);
MatroidInstance load_matroid_file(const std::string& path);

Subset subset_from_json(const Json& j, std::size_t n);
Json subset_to_json(const Subset& s);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

Point point_from_json(const Json& j, std::size_t n);
Json point_to_json(const Point& p);

CardinalitySequence cardinality_from_json(const Json& j);
Json cardinality_to_json(const CardinalitySequence& c);

LinearInequality inequality_from_json(const Json& j);
Json inequality_to_json(const LinearInequality& ineq);

Json certificate_to_json(const MinMaxCertificate& cert);
Json outcome_to_json(const SeparationOutcome& outcome);
Json facet_verdict_to_json(const FacetVerdict& v);
Json verification_report_to_json(const VerificationReport& report);
Json intersection_report_to_json(const IntersectionProbeReport& report);

} // namespace cardmat
