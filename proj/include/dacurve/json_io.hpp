#pragma once

#include <json.hpp>

#include "dacurve/certify.hpp"
#include "dacurve/chi.hpp"
#include "dacurve/rnc.hpp"
#include "dacurve/sections.hpp"
#include "dacurve/slope.hpp"

namespace dacurve {

// JSON forms for the report types. Integers and rationals serialize as
// strings ("p/q" with the denominator omitted when it is 1) so values
// survive any JSON parser unchanged. Object keys are emitted in sorted
// order by the json library, which keeps output byte-stable.
using json = nlohmann::json;

json to_json(const Int& z);
json to_json(const Rat& q);
json to_json(const Monomial& m);
json to_json(const RhoWeights& r);
json to_json(const OccurrenceVector& occ);

json to_json(const chi::ChiBasis& basis);
json to_json(const chi::ValidityReport& rep);
json to_json(const chi::FamilyReport& rep);
json to_json(const chi::SignIdentity& id);

json to_json(const rnc::KempfReport& rep);

json to_json(const sections::SectionTriple& s);
json to_json(const sections::LabeledSection& ls);
json to_json(const sections::MinorReport& rep);
json to_json(const sections::SpanReport& rep);
json to_json(const sections::ExponentAuditEntry& e);

json to_json(const stab::StabilityCertificate& cert, const stab::ClassSystem& sys);
json to_json(const stab::FuzzReport& rep);

json to_json(const slope::BiellipticRow& row);
json to_json(const slope::PolarizationSlope& s);
json to_json(const slope::TrigonalComparison& c);

}  // namespace dacurve
