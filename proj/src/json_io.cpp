#include "dacurve/json_io.hpp"

namespace dacurve {

json to_json(const Int& z) { return z.get_str(); }

json to_json(const Rat& q) { return q.get_str(); }

json to_json(const Monomial& m) { return m.str(); }

json to_json(const RhoWeights& r) {
    json lambda = json::array(), nu = json::array();
    for (const Int& v : r.lambda) lambda.push_back(to_json(v));
    for (const Int& v : r.nu) nu.push_back(to_json(v));
    return json{{"k", r.k}, {"lambda", lambda}, {"nu", nu}};
}

json to_json(const OccurrenceVector& occ) {
    json x = json::array(), y = json::array();
    for (const Int& v : occ.x) x.push_back(to_json(v));
    for (const Int& v : occ.y) y.push_back(to_json(v));
    return json{{"x", x}, {"y", y}};
}

json to_json(const chi::ChiBasis& basis) {
    json mons = json::array();
    for (const Monomial& m : basis.mons) mons.push_back(m.str());
    return json{{"k", basis.k}, {"m", basis.m}, {"monomials", mons}};
}

json to_json(const chi::ValidityReport& rep) {
    json not_mixed = json::array(), wrong_degree = json::array();
    for (const Monomial& m : rep.not_mixed) not_mixed.push_back(m.str());
    for (const Monomial& m : rep.wrong_degree) wrong_degree.push_back(m.str());
    return json{{"valid", rep.valid},
                {"expected_size", rep.expected_size},
                {"actual_size", rep.actual_size},
                {"not_mixed", not_mixed},
                {"wrong_degree", wrong_degree},
                {"missing_degrees", rep.missing_degrees},
                {"duplicated_degrees", rep.duplicated_degrees}};
}

json to_json(const chi::FamilyReport& rep) {
    json repairs = json::array();
    for (const chi::Repair& r : rep.repairs)
        repairs.push_back(json{{"removed", r.removed.str()},
                               {"added", r.added.str()},
                               {"note", r.note}});
    json mons = json::array();
    for (const Monomial& m : rep.basis.mons) mons.push_back(m.str());
    return json{{"family", rep.family},
                {"k", rep.k},
                {"m", rep.m},
                {"s", rep.s},
                {"monomials", mons},
                {"valid", rep.validity.valid},
                {"validity", to_json(rep.validity)},
                {"occurrence", to_json(rep.occ)},
                {"weight_decomposition",
                 json{{"c_k", to_json(rep.decomp.c_top)},
                      {"c_rest", to_json(rep.decomp.c_rest)},
                      {"symmetric", rep.decomp.symmetric},
                      {"uniform", rep.decomp.uniform}}},
                {"repairs", repairs},
                {"note", rep.note}};
}

json to_json(const chi::SignIdentity& id) {
    return json{{"t_route",
                 json{{"occurrence", to_json(id.t_occ)},
                      {"multiple", to_json(id.t_multiple)}}},
                {"s_route",
                 json{{"occurrence", to_json(id.s_occ)},
                      {"multiple", to_json(id.s_multiple)}}}};
}

json to_json(const rnc::KempfReport& rep) {
    json lambda = json::array();
    for (const Int& v : rep.lambda) lambda.push_back(to_json(v));
    return json{{"k", rep.k},
                {"m", rep.m},
                {"lambda", lambda},
                {"min_weight", to_json(rep.min_weight)},
                {"bound", to_json(rep.bound)},
                {"pass", rep.pass}};
}

json to_json(const sections::SectionTriple& s) {
    return json{{"k", s.k},
                {"twist", s.m},
                {"f0", s.f0.str("s0")},
                {"f1", s.f1.str("s1")},
                {"f2", s.f2.str("s2")}};
}

json to_json(const sections::LabeledSection& ls) {
    return json{{"kind", ls.label.str()},
                {"index", ls.label.index},
                {"witness_monomial", ls.witness.str()},
                {"components", to_json(ls.section)}};
}

json to_json(const sections::MinorReport& rep) {
    json minors = json::array();
    for (const auto& m : rep.minors)
        minors.push_back(json{{"col1", m.col1}, {"col2", m.col2}, {"zero", m.zero}});
    return json{{"k", rep.k},
                {"skipped", rep.skipped},
                {"note", rep.note},
                {"count", rep.minors.size()},
                {"all_zero", rep.all_zero},
                {"minors", minors}};
}

json to_json(const sections::SpanReport& rep) {
    return json{{"y1_identity", rep.y1_identity},
                {"xk_identity", rep.xk_identity},
                {"pass", rep.pass()}};
}

json to_json(const sections::ExponentAuditEntry& e) {
    return json{{"element", e.element},
                {"quoted_exponent", e.quoted_exponent},
                {"constructed_exponent", e.constructed_exponent},
                {"consistent", e.consistent},
                {"note", e.note}};
}

json to_json(const stab::StabilityCertificate& cert, const stab::ClassSystem& sys) {
    json out{{"k", cert.k},
             {"m", cert.m},
             {"t", to_json(cert.t)},
             {"verdict", cert.verdict == stab::StabilityCertificate::Verdict::Semistable
                             ? "SEMISTABLE"
                             : "NONSEMISTABLE"}};
    if (cert.verdict == stab::StabilityCertificate::Verdict::Semistable) {
        json witness = json::object();
        for (std::size_t c = 0; c < sys.classes.size(); ++c) {
            json cls = json::object();
            for (std::size_t j = 0; j < sys.classes[c].members.size(); ++j)
                if (cert.witness[c][j] != 0)
                    cls[sys.classes[c].members[j].str()] = to_json(cert.witness[c][j]);
            witness[sys.classes[c].label.str()] = cls;
        }
        out["witness"] = witness;
    } else {
        json lambda = json::array(), nu = json::array();
        for (const Int& v : cert.destabilizer->lambda) lambda.push_back(to_json(v));
        for (const Int& v : cert.destabilizer->nu) nu.push_back(to_json(v));
        out["destabilizer"] = json{{"lambda", lambda},
                                   {"nu", nu},
                                   {"min_weight", to_json(cert.destabilizer_weight)}};
    }
    return out;
}

json to_json(const stab::FuzzReport& rep) {
    json out{{"trials", rep.trials},
             {"seed", rep.seed},
             {"entry_bound", rep.bound},
             {"max_weight", to_json(rep.max_weight)},
             {"argmax_trial", rep.argmax_trial},
             {"all_nonpositive", rep.all_nonpositive}};
    if (rep.argmax_rho) out["argmax_rho"] = to_json(*rep.argmax_rho);
    return out;
}

json to_json(const slope::BiellipticRow& row) {
    json destab = json::array();
    for (const Int& v : row.destabilizer) destab.push_back(to_json(v));
    return json{{"g", row.g},
                {"m", row.m},
                {"s_m", to_json(row.s_m)},
                {"weight_bound", to_json(row.weight_bound)},
                {"verdict", slope::verdict_str(row.verdict)},
                {"destabilizer", destab},
                {"annotation", row.annotation},
                {"slope", to_json(slope::polarization_slope(row.g, row.m).normalized)}};
}

json to_json(const slope::PolarizationSlope& s) {
    return json{{"g", s.g},
                {"m", s.m},
                {"slope", to_json(s.normalized)},
                {"unnormalized_lambda", to_json(s.unnormalized_lambda)},
                {"unnormalized_delta", to_json(s.unnormalized_delta)}};
}

json to_json(const slope::TrigonalComparison& c) {
    return json{{"g", c.g},
                {"trigonal_max", to_json(c.trigonal_max)},
                {"slope_m3", to_json(c.slope_m3)},
                {"trigonal_at_most_slope", c.trigonal_at_most_slope},
                {"boundary", c.boundary},
                {"discriminant", to_json(c.discriminant)}};
}

}  // namespace dacurve
