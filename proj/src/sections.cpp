#include "dacurve/sections.hpp"

#include <map>
#include <sstream>

namespace dacurve::sections {

std::string PluriLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Omega: os << "omega_"; break;
        case Kind::Eta: os << "eta_"; break;
        case Kind::Chi: os << "chi_"; break;
    }
    os << index;
    return os.str();
}

SectionTriple SectionTriple::operator*(const SectionTriple& rhs) const {
    require(k == rhs.k, "SectionTriple product: mismatched k");
    return SectionTriple{k, m + rhs.m, f0 * rhs.f0, f1 * rhs.f1, f2 * rhs.f2};
}

SectionTriple SectionTriple::operator-(const SectionTriple& rhs) const {
    require(k == rhs.k && m == rhs.m, "SectionTriple difference: mismatched twist");
    return SectionTriple{k, m, f0 - rhs.f0, f1 - rhs.f1, f2 - rhs.f2};
}

SectionTriple SectionTriple::scaled(const Rat& c) const {
    return SectionTriple{k, m, f0 * c, f1 * c, f2 * c};
}

std::string SectionTriple::str() const {
    std::ostringstream os;
    os << "(" << f0.str("s0") << ") (ds0)^" << m << " | (" << f1.str("s1")
       << ") (ds1)^" << m << " | (" << f2.str("s2") << ") (ds2)^" << m;
    return os.str();
}

SectionTriple section_x(int k, int i) {
    require(k >= 2, "section_x: k >= 2 required");
    require(1 <= i && i <= k, "section_x: index out of range");
    return SectionTriple{k, 1, LaurentPoly::term(i - 1, 1),
                         LaurentPoly::term(-(i + 1), 1), LaurentPoly{}};
}

SectionTriple section_y(int k, int i) {
    require(k >= 2, "section_y: k >= 2 required");
    require(1 <= i && i <= k, "section_y: index out of range");
    return SectionTriple{k, 1, LaurentPoly{}, LaurentPoly::term(i - 1, 1),
                         LaurentPoly::term(-(i + 1), 1)};
}

std::vector<SectionTriple> canonical_basis(int k) {
    require(k >= 2, "canonical_basis: k >= 2 required");
    std::vector<SectionTriple> out;
    out.reserve(2 * static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) out.push_back(section_x(k, i));
    for (int i = 1; i <= k; ++i) out.push_back(section_y(k, i));
    return out;
}

SectionTriple product(const std::vector<SectionTriple>& factors) {
    require(!factors.empty(), "product: at least one factor");
    SectionTriple acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i];
    return acc;
}

SectionTriple section_of_monomial(const Monomial& mon) {
    const int k = mon.k();
    require(k >= 2, "section_of_monomial: k >= 2 required");
    require(mon.degree() >= 1, "section_of_monomial: degree must be positive");
    SectionTriple acc{k, 0, LaurentPoly::constant(1), LaurentPoly::constant(1),
                      LaurentPoly::constant(1)};
    for (int i = 1; i <= k; ++i) {
        for (int e = 0; e < mon.ax(i); ++e) acc = acc * section_x(k, i);
        for (int e = 0; e < mon.by(i); ++e) acc = acc * section_y(k, i);
    }
    return acc;
}

SectionTriple canonical_representative(int k, int m, const PluriLabel& label) {
    require(k >= 2 && m >= 1, "canonical_representative: bad parameters");
    switch (label.kind) {
        case PluriLabel::Kind::Omega:
            require(0 <= label.index && label.index <= static_cast<long long>(m) * (k - 1),
                    "omega index out of range");
            return SectionTriple{k, m, LaurentPoly::term(label.index, 1),
                                 LaurentPoly::term(-(2 * m + label.index), 1),
                                 LaurentPoly{}};
        case PluriLabel::Kind::Eta:
            require(0 <= label.index && label.index <= static_cast<long long>(m) * (k - 1),
                    "eta index out of range");
            return SectionTriple{k, m, LaurentPoly{},
                                 LaurentPoly::term(label.index, 1),
                                 LaurentPoly::term(-(2 * m + label.index), 1)};
        case PluriLabel::Kind::Chi: {
            long long top = static_cast<long long>(k) * (m - 1) - 1;
            require(-top <= label.index && label.index <= top, "chi index out of range");
            return SectionTriple{k, m, LaurentPoly{},
                                 LaurentPoly::term(-label.index - m, 1), LaurentPoly{}};
        }
    }
    throw std::logic_error("unreachable");
}

Classification classify_monomial(const Monomial& mon, int m) {
    require(m >= 2, "classify_monomial: m >= 2 required");
    require(mon.degree() == m, "classify_monomial: degree mismatch");
    const int k = mon.k();
    require(k >= 2, "classify_monomial: k >= 2 required");

    PluriLabel label{};
    if (mon.pure_x()) {
        label = PluriLabel{PluriLabel::Kind::Omega, mon.omega_index()};
    } else if (mon.pure_y()) {
        label = PluriLabel{PluriLabel::Kind::Eta, mon.eta_index()};
    } else {
        label = PluriLabel{PluriLabel::Kind::Chi, mon.weighted_degree()};
    }

    // The scalar is read off (and re-verified) from the actual Laurent
    // product; with these conventions it is always 1.
    SectionTriple prod = section_of_monomial(mon);
    SectionTriple rep = canonical_representative(k, m, label);
    const LaurentPoly* pc = nullptr;
    const LaurentPoly* rc = nullptr;
    if (!rep.f0.is_zero()) {
        pc = &prod.f0;
        rc = &rep.f0;
    } else if (!rep.f1.is_zero()) {
        pc = &prod.f1;
        rc = &rep.f1;
    } else {
        pc = &prod.f2;
        rc = &rep.f2;
    }
    ensure(!pc->is_zero(), "classify_monomial: product vanishes where representative does not");
    long long e = rc->min_exponent();
    Rat scalar = pc->coeff(e) / rc->coeff(e);
    ensure(scalar != 0 && (prod - rep.scaled(scalar)).is_zero(),
           "classify_monomial: product disagrees with representative");
    return Classification{label, scalar};
}

namespace {

Monomial omega_witness(int k, int m, long long index) {
    // Pure-x monomial of degree m with sum (i-1) a_i = index.
    long long q = index / (k - 1);
    long long r = index % (k - 1);
    if (q == m) {
        ensure(r == 0, "omega_witness: index out of range");
        return Monomial::from_powers(k, {{k, m}}, {});
    }
    std::vector<std::pair<int, int>> xs;
    xs.push_back({k, static_cast<int>(q)});
    xs.push_back({static_cast<int>(r) + 1, 1});
    xs.push_back({1, m - 1 - static_cast<int>(q)});
    return Monomial::from_powers(k, xs, {});
}

}  // namespace

std::vector<LabeledSection> pluricanonical_basis(int k, int m) {
    require(k >= 2, "pluricanonical_basis: k >= 2 required");
    require(m >= 2, "pluricanonical_basis: m >= 2 required");

    std::vector<LabeledSection> out;
    const long long pure_top = static_cast<long long>(m) * (k - 1);
    for (long long i = 0; i <= pure_top; ++i) {
        PluriLabel label{PluriLabel::Kind::Omega, i};
        out.push_back({label, omega_witness(k, m, i), canonical_representative(k, m, label)});
    }
    for (long long i = 0; i <= pure_top; ++i) {
        PluriLabel label{PluriLabel::Kind::Eta, i};
        out.push_back({label, omega_witness(k, m, i).involution(),
                       canonical_representative(k, m, label)});
    }
    // chi witnesses: least mixed monomial of each weighted degree
    std::map<long long, Monomial> first_of_degree;
    for (const Monomial& mon : enumerate_monomials(k, m, Purity::Mixed))
        first_of_degree.try_emplace(mon.weighted_degree(), mon);
    const long long chi_top = static_cast<long long>(k) * (m - 1) - 1;
    for (long long d = -chi_top; d <= chi_top; ++d) {
        PluriLabel label{PluriLabel::Kind::Chi, d};
        auto it = first_of_degree.find(d);
        ensure(it != first_of_degree.end(), "pluricanonical_basis: missing chi degree");
        out.push_back({label, it->second, canonical_representative(k, m, label)});
    }

    // Each element must be realized by its witness monomial.
    for (const LabeledSection& ls : out) {
        Classification c = classify_monomial(ls.witness, m);
        ensure(c.label == ls.label, "pluricanonical_basis: witness classifies differently");
        ensure(section_of_monomial(ls.witness) == ls.section.scaled(c.scalar),
               "pluricanonical_basis: witness product mismatch");
    }
    ensure(out.size() == static_cast<std::size_t>((2 * m - 1) * (2 * k - 1)),
           "pluricanonical_basis: wrong cardinality");
    return out;
}

MinorReport scroll_minor_check(int k) {
    require(k >= 2, "scroll_minor_check: k >= 2 required");
    MinorReport report;
    report.k = k;
    if (k == 2) {
        report.skipped = true;
        report.note =
            "k=2: the scroll matrix has no x-interior columns; the determinantal "
            "description degenerates and the minor check is skipped";
        return report;
    }
    // columns (top, bottom)
    std::vector<std::pair<SectionTriple, SectionTriple>> cols;
    for (int j = 1; j <= k - 1; ++j) cols.push_back({section_x(k, j), section_x(k, j + 1)});
    for (int j = k; j >= 2; --j) cols.push_back({section_y(k, j), section_y(k, j - 1)});

    report.all_zero = true;
    for (std::size_t c1 = 0; c1 < cols.size(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < cols.size(); ++c2) {
            SectionTriple minor =
                cols[c1].first * cols[c2].second - cols[c2].first * cols[c1].second;
            bool zero = minor.is_zero();
            report.minors.push_back({static_cast<int>(c1), static_cast<int>(c2), zero});
            if (!zero) report.all_zero = false;
        }
    return report;
}

SpanReport cotangent_span_check(int k) {
    require(k >= 2, "cotangent_span_check: k >= 2 required");
    SectionTriple xk = section_x(k, k);
    SpanReport report;

    // y_1 = (0, s_1^{k+1}) . x_k on the chart (components on C_0 and C_1)
    {
        SectionTriple y1 = section_y(k, 1);
        LaurentPoly g0;  // zero on the C_0 branch
        LaurentPoly g1 = LaurentPoly::term(k + 1, 1);
        report.y1_identity = (g0 * xk.f0 == y1.f0) && (g1 * xk.f1 == y1.f1);
    }
    // x_{k-1} = (t_0, s_1) . x_k with t_0 = 1/s_0
    {
        SectionTriple xkm1 = section_x(k, k - 1);
        LaurentPoly g0 = LaurentPoly::term(-1, 1);
        LaurentPoly g1 = LaurentPoly::term(1, 1);
        report.xk_identity = (g0 * xk.f0 == xkm1.f0) && (g1 * xk.f1 == xkm1.f1);
    }
    return report;
}

TorusWeights torus_weights(int k) {
    require(k >= 2, "torus_weights: k >= 2 required");
    TorusWeights tw;
    for (int i = 1; i <= k; ++i) tw.weights.push_back(i);
    for (int i = 1; i <= k; ++i) tw.weights.push_back(-i);
    std::vector<long long> sorted = tw.weights;
    std::sort(sorted.begin(), sorted.end());
    tw.multiplicity_free = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    ensure(tw.multiplicity_free, "torus_weights: characters must be distinct");
    return tw;
}

std::vector<ExponentAuditEntry> exponent_audit(int k, int m) {
    require(k >= 2 && m >= 2, "exponent_audit: bad parameters");
    std::vector<ExponentAuditEntry> out;

    auto middle_denominator_from_witness = [&](long long i) {
        Monomial w = omega_witness(k, m, i);
        return -section_of_monomial(w).f1.min_exponent();
    };

    out.push_back({"omega_0", 2LL * m, middle_denominator_from_witness(0), true,
                   "denominator exponent of s_1 in the middle component"});
    if (m * (k - 1) >= 1) {
        long long constructed = middle_denominator_from_witness(1);
        // A quoted closed form for omega_1 carries s_1^{2m-1}; the m-fold
        // product x_1^{m-1} x_2 forces s_1^{2m+1}. Suspected transcription
        // slip in that form; the constructed table uses 2m+1 throughout
        // (omega_i carries s_1^{2m+i}).
        out.push_back({"omega_1 (quoted variant)", 2LL * m - 1, constructed,
                       2LL * m - 1 == constructed,
                       "inconsistent with the product realization; suspected typo"});
        out.push_back({"omega_1", 2LL * m + 1, constructed, 2LL * m + 1 == constructed,
                       "product-consistent exponent"});
        // eta_1 outer component: quoted s_2^{2m+1} agrees with the product.
        Monomial w = omega_witness(k, m, 1).involution();
        long long eta_den = -section_of_monomial(w).f2.min_exponent();
        out.push_back({"eta_1", 2LL * m + 1, eta_den, 2LL * m + 1 == eta_den,
                       "denominator exponent of s_2 in the outer component"});
    }
    return out;
}

}  // namespace dacurve::sections
