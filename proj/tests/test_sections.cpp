#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dacurve/sections.hpp"

using namespace dacurve;
using namespace dacurve::sections;

namespace {

Monomial mono(int k, std::vector<std::pair<int, int>> xs,
              std::vector<std::pair<int, int>> ys) {
    return Monomial::from_powers(k, xs, ys);
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
    LaurentPoly a = LaurentPoly::term(2, Rat(3)) + LaurentPoly::term(-1, make_rat(1, 2));
    LaurentPoly b = LaurentPoly::term(-2, Rat(4));
    LaurentPoly p = a * b;
    CHECK(p.coeff(0) == 12);
    CHECK(p.coeff(-3) == 2);
    CHECK(p.support_size() == 2);
    CHECK((a - a).is_zero());
    CHECK(a.min_exponent() == -1);
    CHECK(a.max_exponent() == 2);
    CHECK(LaurentPoly::term(1, Rat(1)).str("s1") == "1*s1^1");
}

TEST_CASE("canonical basis entries") {
    auto basis = canonical_basis(2);
    REQUIRE(basis.size() == 4);
    // x_2 = (s_0 ds_0, ds_1/s_1^3, 0)
    CHECK(basis[1].f0 == LaurentPoly::term(1, 1));
    CHECK(basis[1].f1 == LaurentPoly::term(-3, 1));
    CHECK(basis[1].f2.is_zero());
    // y_1 = (0, ds_1, ds_2/s_2^2)
    CHECK(basis[2].f0.is_zero());
    CHECK(basis[2].f1 == LaurentPoly::term(0, 1));
    CHECK(basis[2].f2 == LaurentPoly::term(-2, 1));

    for (int k = 2; k <= 6; ++k) CHECK(canonical_basis(k).size() == 2 * static_cast<std::size_t>(k));
    CHECK_THROWS_AS(canonical_basis(1), std::invalid_argument);
}

TEST_CASE("products of canonical sections") {
    // x_1 * x_1 at k=2 is omega_0 at m=2
    SectionTriple sq = section_x(2, 1) * section_x(2, 1);
    CHECK(sq.m == 2);
    CHECK(sq == canonical_representative(2, 2, {PluriLabel::Kind::Omega, 0}));
    // x_1 * y_1 is chi_0 at m=2
    SectionTriple chi0 = section_x(2, 1) * section_y(2, 1);
    CHECK(chi0 == canonical_representative(2, 2, {PluriLabel::Kind::Chi, 0}));

    // mixed products vanish on C_0 and C_2
    for (int k = 2; k <= 4; ++k)
        for (const Monomial& m : enumerate_monomials(k, 3, Purity::Mixed)) {
            SectionTriple s = section_of_monomial(m);
            CHECK(s.f0.is_zero());
            CHECK(s.f2.is_zero());
            CHECK(!s.f1.is_zero());
        }
}

TEST_CASE("classification of named monomials") {
    for (int m = 2; m <= 5; ++m) {
        auto c = classify_monomial(mono(3, {{1, m}}, {}), m);
        CHECK(c.label == PluriLabel{PluriLabel::Kind::Omega, 0});
        CHECK(c.scalar == 1);
        c = classify_monomial(mono(3, {{3, m}}, {}), m);
        CHECK(c.label == PluriLabel{PluriLabel::Kind::Omega, m * 2});
        c = classify_monomial(mono(3, {{3, m - 1}}, {{1, 1}}), m);
        CHECK(c.label == PluriLabel{PluriLabel::Kind::Chi, 3 * (m - 1) - 1});
    }
    CHECK_THROWS_AS(classify_monomial(mono(2, {{1, 2}}, {}), 3), std::invalid_argument);
}

TEST_CASE("classification agrees with the Laurent product everywhere") {
    for (int k = 2; k <= 4; ++k)
        for (int m = 2; m <= 4; ++m)
            for (const Monomial& mon : enumerate_monomials(k, m, Purity::All)) {
                Classification c = classify_monomial(mon, m);
                CHECK(c.scalar == 1);
                SectionTriple rep = canonical_representative(k, m, c.label);
                CHECK(section_of_monomial(mon) == rep.scaled(c.scalar));
            }
}

TEST_CASE("pluricanonical basis: counts, witnesses, supports") {
    CHECK(pluricanonical_basis(2, 2).size() == 9);
    for (int k = 2; k <= 6; ++k)
        for (int m = 2; m <= 6; ++m) {
            auto basis = pluricanonical_basis(k, m);
            CHECK(basis.size() == static_cast<std::size_t>((2 * m - 1) * (2 * k - 1)));
            // distinct extremal supports certify linear independence
            std::set<std::tuple<int, long long>> signatures;
            for (const LabeledSection& ls : basis) {
                int component = !ls.section.f0.is_zero()   ? 0
                                : !ls.section.f2.is_zero() ? 2
                                                           : 1;
                long long ext = component == 0   ? ls.section.f0.min_exponent()
                                : component == 2 ? ls.section.f2.min_exponent()
                                                 : ls.section.f1.min_exponent();
                CHECK(signatures.insert({component, ext}).second);
                // middle-component exponent window
                if (!ls.section.f1.is_zero()) {
                    CHECK(ls.section.f1.min_exponent() >= -static_cast<long long>(m) * (k + 1));
                    CHECK(ls.section.f1.max_exponent() <= static_cast<long long>(m) * (k - 1));
                }
                CHECK(ls.witness.degree() == m);
            }
        }

    // named rows
    auto basis = pluricanonical_basis(3, 4);
    const long long chi_top = 3 * (4 - 1) - 1;
    for (const LabeledSection& ls : basis) {
        if (ls.label == PluriLabel{PluriLabel::Kind::Chi, chi_top})
            CHECK(ls.section.f1 == LaurentPoly::term(-(4 - 1) * (3 + 1), 1));
        if (ls.label == PluriLabel{PluriLabel::Kind::Omega, 4 * (3 - 1)}) {
            CHECK(ls.section.f0 == LaurentPoly::term(4 * (3 - 1), 1));
            CHECK(ls.section.f1 == LaurentPoly::term(-4 * (3 + 1), 1));
        }
    }
}

TEST_CASE("scroll minors vanish") {
    auto rep = scroll_minor_check(3);
    CHECK(!rep.skipped);
    CHECK(rep.minors.size() == 6);  // C(2k-2, 2) = C(4, 2)
    CHECK(rep.all_zero);

    // the two named minors at k=3
    SectionTriple m1 = section_x(3, 1) * section_x(3, 3) - section_x(3, 2) * section_x(3, 2);
    CHECK(m1.is_zero());
    SectionTriple m2 = section_x(3, 1) * section_y(3, 1) - section_x(3, 2) * section_y(3, 2);
    CHECK(m2.is_zero());

    for (int k = 4; k <= 6; ++k) {
        auto r = scroll_minor_check(k);
        CHECK(r.all_zero);
        CHECK(r.minors.size() ==
              static_cast<std::size_t>((2 * k - 2) * (2 * k - 3) / 2));
    }

    auto degenerate = scroll_minor_check(2);
    CHECK(degenerate.skipped);
    CHECK(!degenerate.note.empty());
    CHECK_THROWS_AS(scroll_minor_check(1), std::invalid_argument);
}

TEST_CASE("cotangent span identities") {
    for (int k = 2; k <= 6; ++k) {
        auto rep = cotangent_span_check(k);
        CHECK(rep.y1_identity);
        CHECK(rep.xk_identity);
        CHECK(rep.pass());
    }
}

TEST_CASE("torus weights") {
    auto tw = torus_weights(2);
    CHECK(tw.weights == std::vector<long long>{1, 2, -1, -2});
    CHECK(tw.multiplicity_free);
    CHECK(torus_weights(5).weights.size() == 10);
    for (int k = 2; k <= 50; ++k) {
        auto t = torus_weights(k);
        CHECK(t.weights.size() == 2 * static_cast<std::size_t>(k));
        CHECK(t.multiplicity_free);
    }
}

TEST_CASE("exponent audit flags the omega_1 variant") {
    for (int k = 2; k <= 4; ++k)
        for (int m = 2; m <= 4; ++m) {
            auto audit = exponent_audit(k, m);
            bool found_flag = false;
            for (const auto& e : audit) {
                if (e.element == "omega_1 (quoted variant)") {
                    found_flag = true;
                    CHECK(!e.consistent);
                    CHECK(e.quoted_exponent == 2 * m - 1);
                    CHECK(e.constructed_exponent == 2 * m + 1);
                } else {
                    CHECK(e.consistent);
                }
            }
            CHECK(found_flag);
        }
}
