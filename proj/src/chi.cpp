#include "dacurve/chi.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dacurve/rng.hpp"

namespace dacurve::chi {

namespace {

long long chi_top(int k, int m) { return static_cast<long long>(k) * (m - 1) - 1; }

std::vector<Monomial> sorted_unique(std::vector<Monomial> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Monomial xkyk_times(int k, int ak, int bk, int var_index, bool var_is_y) {
    std::vector<std::pair<int, int>> xs{{k, ak}}, ys{{k, bk}};
    if (var_is_y)
        ys.push_back({var_index, 1});
    else
        xs.push_back({var_index, 1});
    return Monomial::from_powers(k, xs, ys);
}

}  // namespace

Int ChiBasis::weight(const RhoWeights& r) const {
    Int w = 0;
    for (const Monomial& mon : mons) w += rho_weight(mon, r);
    return w;
}

ValidityReport is_chi_basis(const std::vector<Monomial>& candidate, int k, int m) {
    ValidityReport rep;
    rep.expected_size = 2LL * k * (m - 1) - 1;
    std::set<Monomial> distinct;
    for (const Monomial& mon : candidate) {
        require(mon.k() == k, "is_chi_basis: monomial with wrong k");
        distinct.insert(mon);
    }
    rep.actual_size = static_cast<long long>(distinct.size());

    std::map<long long, int> degree_count;
    for (const Monomial& mon : distinct) {
        if (!mon.mixed()) rep.not_mixed.push_back(mon);
        if (mon.degree() != m) rep.wrong_degree.push_back(mon);
        ++degree_count[mon.weighted_degree()];
    }
    const long long top = chi_top(k, m);
    for (long long d = -top; d <= top; ++d)
        if (!degree_count.count(d)) rep.missing_degrees.push_back(d);
    for (const auto& [d, c] : degree_count)
        if (c > 1) rep.duplicated_degrees.push_back(d);

    rep.valid = rep.actual_size == rep.expected_size && rep.not_mixed.empty() &&
                rep.wrong_degree.empty() && rep.missing_degrees.empty() &&
                rep.duplicated_degrees.empty();
    return rep;
}

ChiBasis family_B(int k, int variant) {
    require(k >= 2, "family_B: k >= 2 required");
    require(variant == 1 || variant == 2, "family_B: variant must be 1 or 2");
    std::vector<Monomial> mons;
    if (variant == 1) {
        // x_k y_1, x_{k-1} y_1, x_{k-1} y_2, ..., x_1 y_{k-1}, x_1 y_k:
        // weighted degrees k-1 down to 1-k, one per step.
        for (int j = 0; j <= k - 1; ++j)
            mons.push_back(Monomial::from_powers(k, {{k - j, 1}}, {{j + 1, 1}}));
        for (int j = 1; j <= k - 1; ++j)
            mons.push_back(Monomial::from_powers(k, {{k - j, 1}}, {{j, 1}}));
    } else {
        for (int i = 1; i <= k; ++i)
            mons.push_back(Monomial::from_powers(k, {{k, 1}}, {{i, 1}}));
        for (int i = 1; i <= k - 1; ++i)
            mons.push_back(Monomial::from_powers(k, {{i, 1}}, {{k, 1}}));
    }
    ChiBasis basis{k, 2, sorted_unique(std::move(mons))};
    ensure(is_chi_basis(basis.mons, k, 2).valid, "family_B: construction is not a chi-basis");
    return basis;
}

std::vector<Monomial> family_T1(int k, int m) {
    require(k >= 2, "family_T1: k >= 2 required");
    require(m >= 3, "family_T1: m >= 3 required");
    // Degree-m stratum of the ideal
    //   x_k^{m-1}(y_*) + x_k^{m-2}y_k(all but x_k) + ... + x_k y_k^{m-2}(all
    //   but x_k) + y_k^{m-1}(x_1..x_{k-1});
    // the generators are themselves degree m, so expansion is the generator
    // set itself, deduplicated.
    std::vector<Monomial> mons;
    for (int j = 1; j <= k; ++j) mons.push_back(xkyk_times(k, m - 1, 0, j, true));
    for (int i = 1; i <= m - 2; ++i) {
        for (int j = 1; j <= k - 1; ++j) mons.push_back(xkyk_times(k, m - 1 - i, i, j, false));
        for (int j = 1; j <= k; ++j) mons.push_back(xkyk_times(k, m - 1 - i, i, j, true));
    }
    for (int j = 1; j <= k - 1; ++j) mons.push_back(xkyk_times(k, 0, m - 1, j, false));
    return sorted_unique(std::move(mons));
}

std::vector<long long> t1_missing_degrees(int k, int m) {
    std::vector<long long> ds;
    for (long long t = m - 3; t >= -(m - 3); t -= 2) ds.push_back(static_cast<long long>(k) * t);
    return ds;
}

ChiBasis family_T(int k, int m, int s, TVariant variant) {
    require(k >= 2, "family_T: k >= 2 required");
    require(m >= 3, "family_T: m >= 3 required");
    require(1 <= s && s <= k - 1, "family_T: s out of range");
    std::vector<Monomial> mons = family_T1(k, m);
    for (int i = 0; i <= m - 3; ++i) {
        if (variant == TVariant::Plain) {
            // x_k^{m-3-i} y_k^{1+i} x_{k-s} x_s
            mons.push_back(Monomial::from_powers(
                k, {{k, m - 3 - i}, {k - s, 1}, {s, 1}}, {{k, 1 + i}}));
        } else {
            mons.push_back(Monomial::from_powers(
                k, {{k, 1 + i}}, {{k, m - 3 - i}, {k - s, 1}, {s, 1}}));
        }
    }
    ChiBasis basis{k, m, sorted_unique(std::move(mons))};
    ensure(is_chi_basis(basis.mons, k, m).valid, "family_T: construction is not a chi-basis");
    return basis;
}

std::vector<Monomial> family_S1(int k, int m, bool literal) {
    require(k >= 2, "family_S1: k >= 2 required");
    require(m >= 3, "family_S1: m >= 3 required");
    std::vector<Monomial> mons;
    const int ell = k / 2;

    if (k % 2 == 0) {
        // weighted degrees k(m-1)-1 down to m
        for (int j = 1; j <= ell - 1; ++j)  // m terms per row
            for (int t = 0; t <= m - 1; ++t)
                mons.push_back(Monomial::from_powers(
                    k, {{k - j + 1, m - 1 - t}, {k - j, t}}, {{j, 1}}));
        for (int i = ell; i >= 1; --i)  // m-2 terms per row
            for (int t = 0; t <= m - 3; ++t)
                mons.push_back(Monomial::from_powers(
                    k, {{i + 1, m - 1 - t}, {i, t}}, {{i, 1}}));
    } else {
        // weighted degrees k(m-1)-1 down to m-1
        for (int j = 1; j <= ell - 1; ++j)
            for (int t = 0; t <= m - 1; ++t)
                mons.push_back(Monomial::from_powers(
                    k, {{k - j + 1, m - 1 - t}, {k - j, t}}, {{j, 1}}));
        for (int i = ell; i >= 1; --i) {
            if (literal && ell >= 2 && i == ell - 1) {
                // The quoted row for this index carries two entries of the
                // wrong total degree; reproduce them verbatim.
                mons.push_back(Monomial::from_powers(k, {{ell + 1, m - 2}}, {{ell - 1, 1}}));
                if (m >= 4)
                    mons.push_back(Monomial::from_powers(
                        k, {{ell + 1, m - 1}, {ell, 1}}, {{ell, 1}}));
                for (int t = 2; t <= m - 3; ++t)
                    mons.push_back(Monomial::from_powers(
                        k, {{i + 2, m - 1 - t}, {i + 1, t}}, {{i, 1}}));
            } else {
                for (int t = 0; t <= m - 3; ++t)
                    mons.push_back(Monomial::from_powers(
                        k, {{i + 2, m - 1 - t}, {i + 1, t}}, {{i, 1}}));
            }
        }
        mons.push_back(Monomial::from_powers(k, {{ell + 2, 1}, {2, m - 2}}, {{ell, 1}}));
        for (int t = 0; t <= m - 2; ++t)
            mons.push_back(Monomial::from_powers(
                k, {{ell + 1, 1}, {2, m - 2 - t}, {1, t}}, {{ell, 1}}));
    }
    return sorted_unique(std::move(mons));
}

std::vector<Monomial> family_S2(int k, int m, int s) {
    require(k >= 2, "family_S2: k >= 2 required");
    require(m >= 3, "family_S2: m >= 3 required");
    require(1 <= s && s <= k - 1, "family_S2: s out of range");
    std::vector<Monomial> mons;
    const int ell = k / 2;

    if (k % 2 == 0) {
        // weighted degrees m-1 down to 1-m
        mons.push_back(Monomial::from_powers(k, {{ell + 1, 1}, {1, m - 2}}, {{ell, 1}}));
        for (int i = 0; 2 * i <= m - 2; ++i)
            mons.push_back(Monomial::from_powers(
                k, {{ell, 1}, {s, i}, {1, m - 2 * i - 2}}, {{ell, 1}, {s, i}}));
        for (int i = 0; 2 * i < m - 2; ++i)
            mons.push_back(Monomial::from_powers(
                k, {{ell, 1}, {s, i}}, {{ell, 1}, {s, i}, {1, m - 2 * i - 2}}));
        for (int i = 0; 2 * i <= m - 3; ++i)
            mons.push_back(Monomial::from_powers(
                k, {{k, 1}, {s, i}, {1, m - 2 * i - 3}}, {{s, i + 1}, {k - s, 1}}));
        for (int i = 0; 2 * i < m - 3; ++i)
            mons.push_back(Monomial::from_powers(
                k, {{k, 1}, {s, i}}, {{s, i + 1}, {k - s, 1}, {1, m - 2 * i - 3}}));
        mons.push_back(Monomial::from_powers(k, {{ell, 1}}, {{ell + 1, 1}, {1, m - 2}}));
    } else {
        // weighted degrees m-2 down to 2-m
        for (int i = 0; 2 * i <= m - 2; ++i)
            mons.push_back(Monomial::from_powers(
                k, {{ell + 1, 1}, {s, i}, {1, m - 2 - 2 * i}}, {{ell + 1, 1}, {s, i}}));
        for (int i = 0; 2 * i < m - 2; ++i)
            mons.push_back(Monomial::from_powers(
                k, {{ell + 1, 1}, {s, i}}, {{ell + 1, 1}, {s, i}, {1, m - 2 - 2 * i}}));
        for (int i = 0; 2 * i <= m - 3; ++i)
            mons.push_back(Monomial::from_powers(
                k, {{k, 1}, {s, i}, {1, m - 3 - 2 * i}}, {{s, i + 1}, {k - s, 1}}));
        for (int i = 0; 2 * i < m - 3; ++i)
            mons.push_back(Monomial::from_powers(
                k, {{k, 1}, {s, i}}, {{s, i + 1}, {k - s, 1}, {1, m - 3 - 2 * i}}));
    }
    return sorted_unique(std::move(mons));
}

ChiBasis family_S(int k, int m, int s, bool mirrored) {
    std::vector<Monomial> mons = family_S1(k, m, /*literal=*/false);
    {
        std::vector<Monomial> mirror;
        mirror.reserve(mons.size());
        for (const Monomial& mon : mons) mirror.push_back(mon.involution());
        mons.insert(mons.end(), mirror.begin(), mirror.end());
    }
    for (const Monomial& mon : family_S2(k, m, s))
        mons.push_back(mirrored ? mon.involution() : mon);
    ChiBasis basis{k, m, sorted_unique(std::move(mons))};
    ensure(is_chi_basis(basis.mons, k, m).valid, "family_S: construction is not a chi-basis");
    return basis;
}

std::vector<Repair> family_S_repairs(int k, int m) {
    require(k >= 2 && m >= 3, "family_S_repairs: bad parameters");
    std::vector<Monomial> literal = family_S1(k, m, true);
    std::vector<Monomial> shipped = family_S1(k, m, false);
    std::vector<Monomial> removed, added;
    std::set_difference(literal.begin(), literal.end(), shipped.begin(), shipped.end(),
                        std::back_inserter(removed));
    std::set_difference(shipped.begin(), shipped.end(), literal.begin(), literal.end(),
                        std::back_inserter(added));
    ensure(removed.size() == added.size(), "family_S_repairs: unbalanced diff");
    std::vector<Repair> repairs;
    for (std::size_t i = 0; i < removed.size(); ++i)
        repairs.push_back({removed[i], added[i],
                           "degree-restoring correction to the quoted S_1 listing"});
    return repairs;
}

WeightDecomposition weight_decomposition(const OccurrenceVector& occ) {
    WeightDecomposition d;
    const int k = occ.k();
    d.symmetric = occ.x == occ.y;
    d.uniform = true;
    for (int i = 1; i < k - 1; ++i)
        if (occ.x[static_cast<std::size_t>(i)] != occ.x[0]) d.uniform = false;
    d.c_top = occ.x[static_cast<std::size_t>(k - 1)];
    d.c_rest = (k >= 2) ? occ.x[0] : Int(0);
    return d;
}

FamilyReport report_family(const std::string& family, int k, int m, int s) {
    FamilyReport rep;
    rep.family = family;
    rep.k = k;
    rep.m = m;
    rep.s = s;
    if (family == "B1" || family == "B2") {
        require(m == 2, "report_family: B families exist at m = 2 only");
        rep.basis = family_B(k, family == "B1" ? 1 : 2);
    } else if (family == "T2" || family == "T2m") {
        rep.basis = family_T(k, m, s, family == "T2" ? TVariant::Plain : TVariant::Mirrored);
    } else if (family == "S" || family == "Sm") {
        rep.basis = family_S(k, m, s, family == "Sm");
        rep.repairs = family_S_repairs(k, m);
        if (!rep.repairs.empty())
            rep.note = "quoted S_1 rows contained entries of the wrong total degree";
    } else {
        require(false, "report_family: unknown family id " + family);
    }
    rep.validity = is_chi_basis(rep.basis.mons, k, m);
    rep.occ = occurrences(rep.basis.mons, k);
    rep.decomp = weight_decomposition(rep.occ);

    // The decomposition must reproduce the weight on random trace-zero
    // vectors whenever it is symmetric and uniform.
    if (rep.decomp.symmetric && rep.decomp.uniform) {
        SplitMix64 gen(0x5eedULL + static_cast<std::uint64_t>(k * 131 + m * 17 + s));
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Int> lambda, nu;
            Int sum = 0;
            for (int i = 0; i < k; ++i) {
                lambda.emplace_back(static_cast<long>(gen.uniform(-50, 50)));
                sum += lambda.back();
            }
            for (int i = 0; i < k - 1; ++i) {
                nu.emplace_back(static_cast<long>(gen.uniform(-50, 50)));
                sum += nu.back();
            }
            nu.emplace_back(-sum);
            RhoWeights r(k, lambda, nu);
            Int top = r.lambda[static_cast<std::size_t>(k - 1)] + r.nu[static_cast<std::size_t>(k - 1)];
            Int expected = (rep.decomp.c_top - rep.decomp.c_rest) * top;
            ensure(rep.basis.weight(r) == expected,
                   "report_family: symbolic decomposition failed to reproduce the weight");
        }
    }
    return rep;
}

ChiSelector::ChiSelector(int k, int m) : k_(k), m_(m), selector_(2 * static_cast<std::size_t>(k)) {
    require(k >= 2, "ChiSelector: k >= 2 required");
    require(m >= 2, "ChiSelector: m >= 2 required");
    const long long top = chi_top(k, m);
    std::map<long long, std::vector<Monomial>> buckets;
    for (Monomial& mon : enumerate_monomials(k, m, Purity::Mixed))
        buckets[mon.weighted_degree()].push_back(std::move(mon));
    ensure(static_cast<long long>(buckets.size()) == 2 * top + 1,
           "ChiSelector: degree buckets disagree with the chi range");
    for (auto& [d, mons] : buckets) {
        ensure(-top <= d && d <= top, "ChiSelector: degree out of range");
        std::vector<std::vector<int>> rows;
        rows.reserve(mons.size());
        for (const Monomial& mon : mons) {
            std::vector<int> row = mon.a();
            row.insert(row.end(), mon.b().begin(), mon.b().end());
            rows.push_back(std::move(row));
        }
        selector_.add_group(rows);
        by_degree_.push_back(std::move(mons));
    }
}

std::pair<ChiBasis, Int> ChiSelector::min_basis(const RhoWeights& r) const {
    require(r.k == k_, "ChiSelector: weight dimension mismatch");
    require(r.trace_zero(), "ChiSelector: trace-zero weights required");
    GroupedSelector::Selection sel = selector_.select(r.flat());
    ChiBasis basis{k_, m_, {}};
    basis.mons.reserve(by_degree_.size());
    for (std::size_t g = 0; g < by_degree_.size(); ++g)
        basis.mons.push_back(by_degree_[g][sel.picks[g]]);
    std::sort(basis.mons.begin(), basis.mons.end());
    return {std::move(basis), std::move(sel.weight)};
}

Int ChiSelector::min_weight(const RhoWeights& r) const {
    require(r.k == k_, "ChiSelector: weight dimension mismatch");
    require(r.trace_zero(), "ChiSelector: trace-zero weights required");
    return selector_.select(r.flat()).weight;
}

std::pair<ChiBasis, Int> min_weight_chi_basis(int k, int m, const RhoWeights& r) {
    return ChiSelector(k, m).min_basis(r);
}

NonpositiveChiEngine::NonpositiveChiEngine(int k, int m)
    : k_(k), m_(m), selector_(k, m) {
    require(k >= 2 && m >= 2, "NonpositiveChiEngine: bad parameters");
    if (m == 2) {
        t_route_.push_back({"B1 (lambda_k+nu_k >= 0)", family_B(k, 1)});
        s_route_.push_back({"B2 (lambda_k+nu_k <= 0)", family_B(k, 2)});
        return;
    }
    for (int s = 1; s <= k - 1; ++s) {
        t_route_.push_back({"T2(s=" + std::to_string(s) + ")",
                            family_T(k, m, s, TVariant::Plain)});
        t_route_.push_back({"T2'(s=" + std::to_string(s) + ")",
                            family_T(k, m, s, TVariant::Mirrored)});
        s_route_.push_back({"S(s=" + std::to_string(s) + ")", family_S(k, m, s, false)});
        s_route_.push_back({"S'(s=" + std::to_string(s) + ")", family_S(k, m, s, true)});
    }
}

const ChiBasis* NonpositiveChiEngine::dispatch(const RhoWeights& r, std::string* note,
                                               Int* weight_out) const {
    require(r.k == k_, "nonpositive chi dispatch: weight dimension mismatch");
    require(r.trace_zero(), "nonpositive chi dispatch: trace-zero weights required");
    Int top = r.lambda[static_cast<std::size_t>(k_ - 1)] +
              r.nu[static_cast<std::size_t>(k_ - 1)];
    // The T-route weights sum to a positive multiple of lambda_k+nu_k and
    // the S-route weights to a negative one, so the route matching the sign
    // always contains a non-positive member.
    const auto& first = (top <= 0) ? t_route_ : s_route_;
    const auto& second = (top <= 0) ? s_route_ : t_route_;
    for (const auto* route : {&first, &second})
        for (const auto& [name, basis] : *route) {
            Int w = basis.weight(r);
            if (w <= 0) {
                if (note) *note = name;
                if (weight_out) *weight_out = std::move(w);
                return &basis;
            }
        }
    return nullptr;
}

ChiBasis NonpositiveChiEngine::basis(const RhoWeights& r, std::string* dispatch_note) const {
    Int w;
    if (const ChiBasis* hit = dispatch(r, dispatch_note, &w)) return *hit;
    auto [fallback, weight] = selector_.min_basis(r);
    ensure(weight <= 0,
           "nonpositive_chi_basis: no chi-basis of non-positive weight exists; this "
           "contradicts the non-positive-basis theorem");
    if (dispatch_note) *dispatch_note = "exact minimum fallback";
    return std::move(fallback);
}

Int NonpositiveChiEngine::weight(const RhoWeights& r) const {
    Int w;
    if (dispatch(r, nullptr, &w)) return w;
    Int min_weight = selector_.min_basis(r).second;
    ensure(min_weight <= 0,
           "nonpositive_chi_basis: no chi-basis of non-positive weight exists; this "
           "contradicts the non-positive-basis theorem");
    return min_weight;
}

ChiBasis nonpositive_chi_basis(int k, int m, const RhoWeights& r, std::string* dispatch_note) {
    return NonpositiveChiEngine(k, m).basis(r, dispatch_note);
}

SignIdentity family_sign_identity(int k, int m) {
    require(k >= 2 && m >= 3, "family_sign_identity: m >= 3 required");
    SignIdentity id;
    id.t_occ = OccurrenceVector(k);
    id.s_occ = OccurrenceVector(k);
    auto accumulate = [&](OccurrenceVector& into, const ChiBasis& basis) {
        OccurrenceVector occ = occurrences(basis.mons, k);
        for (int i = 0; i < k; ++i) {
            into.x[static_cast<std::size_t>(i)] += occ.x[static_cast<std::size_t>(i)];
            into.y[static_cast<std::size_t>(i)] += occ.y[static_cast<std::size_t>(i)];
        }
    };
    for (int s = 1; s <= k - 1; ++s) {
        accumulate(id.t_occ, family_T(k, m, s, TVariant::Plain));
        accumulate(id.t_occ, family_T(k, m, s, TVariant::Mirrored));
        accumulate(id.s_occ, family_S(k, m, s, false));
        accumulate(id.s_occ, family_S(k, m, s, true));
    }
    id.t_decomp = weight_decomposition(id.t_occ);
    id.s_decomp = weight_decomposition(id.s_occ);
    ensure(id.t_decomp.symmetric && id.t_decomp.uniform,
           "family_sign_identity: T-route occurrences not symmetric/uniform");
    ensure(id.s_decomp.symmetric && id.s_decomp.uniform,
           "family_sign_identity: S-route occurrences not symmetric/uniform");
    id.t_multiple = id.t_decomp.c_top - id.t_decomp.c_rest;
    id.s_multiple = id.s_decomp.c_top - id.s_decomp.c_rest;
    return id;
}

SRouteAudit s_route_occurrence_audit(int k, int m) {
    SignIdentity id = family_sign_identity(k, m);
    SRouteAudit audit;
    audit.actual_top = id.s_decomp.c_top;
    audit.actual_other = id.s_decomp.c_rest;
    Int km1(k - 1);
    Int mm(m);
    if (k % 2 == 0) {
        audit.quoted_top = 2 * km1 * (mm * mm - mm) - km1 * (mm * mm - 2 * mm + 2);
    } else {
        audit.quoted_top = 2 * km1 * binomial(static_cast<unsigned long>(m), 2) +
                           2 * km1 * (mm - 2);
    }
    audit.quoted_other = 2 * km1 * (mm * mm - mm) + (mm - 2) * (mm - 1);
    audit.top_matches = audit.actual_top == audit.quoted_top;
    audit.other_matches = audit.actual_other == audit.quoted_other;
    return audit;
}

}  // namespace dacurve::chi
