#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dacurve/monomial.hpp"
#include "dacurve/rng.hpp"

using namespace dacurve;

namespace {

Monomial mono(int k, std::vector<std::pair<int, int>> xs,
              std::vector<std::pair<int, int>> ys) {
    return Monomial::from_powers(k, xs, ys);
}

RhoWeights random_rho(int k, SplitMix64& gen, long long bound, bool trace_zero) {
    std::vector<Int> lambda, nu;
    Int sum = 0;
    for (int i = 0; i < k; ++i) {
        lambda.emplace_back(static_cast<long>(gen.uniform(-bound, bound)));
        sum += lambda.back();
    }
    for (int i = 0; i < k; ++i) {
        nu.emplace_back(static_cast<long>(gen.uniform(-bound, bound)));
        sum += nu.back();
    }
    if (trace_zero) nu.back() -= sum;
    return RhoWeights(k, lambda, nu);
}

}  // namespace

TEST_CASE("weighted degree of named monomials") {
    CHECK(mono(2, {{2, 1}}, {{1, 1}}).weighted_degree() == 1);  // x_2 y_1
    CHECK(mono(2, {{1, 1}}, {{1, 1}}).weighted_degree() == 0);  // x_1 y_1
    for (int k = 2; k <= 6; ++k)
        for (int m = 2; m <= 6; ++m)
            CHECK(mono(k, {{k, m - 1}}, {{1, 1}}).weighted_degree() ==
                  static_cast<long long>(k) * (m - 1) - 1);
}

TEST_CASE("rho weight basics") {
    RhoWeights r(2, {1, -1}, {1, -1});
    CHECK(rho_weight(mono(2, {{1, 1}}, {{1, 1}}), r) == 2);
    CHECK(rho_weight(mono(2, {{2, 1}}, {{2, 1}}), r) == -2);

    // B_1 at k=2: {x_2 y_1, x_1 y_1, x_1 y_2}; weight = -(lambda_2 + nu_2)
    std::vector<Monomial> b1{mono(2, {{2, 1}}, {{1, 1}}), mono(2, {{1, 1}}, {{1, 1}}),
                             mono(2, {{1, 1}}, {{2, 1}})};
    Int w = 0;
    for (const auto& m : b1) w += rho_weight(m, r);
    CHECK(w == 2);
    CHECK(w == -(r.lambda[1] + r.nu[1]));

    RhoWeights bad(3, {0, 0, 0}, {0, 0, 0});
    CHECK_THROWS_AS(rho_weight(mono(2, {{1, 1}}, {}), bad), std::invalid_argument);
}

TEST_CASE("involution") {
    CHECK(mono(2, {{2, 1}}, {{1, 1}}).involution() == mono(2, {{1, 1}}, {{2, 1}}));
    CHECK(mono(2, {{1, 1}}, {{1, 1}}).involution() == mono(2, {{1, 1}}, {{1, 1}}));
    for (int k = 2; k <= 5; ++k)
        for (const Monomial& m : enumerate_monomials(k, 3, Purity::All)) {
            CHECK(m.involution().involution() == m);
            CHECK(m.involution().weighted_degree() == -m.weighted_degree());
        }
    // sign flip on the top chi monomial
    Monomial top = mono(3, {{3, 4}}, {{1, 1}});
    CHECK(top.involution().weighted_degree() == -(3 * 4 - 1));
}

TEST_CASE("enumeration order and counts") {
    auto mixed = enumerate_monomials(2, 2, Purity::Mixed);
    REQUIRE(mixed.size() == 4);
    CHECK(mixed[0] == mono(2, {{1, 1}}, {{1, 1}}));
    CHECK(mixed[1] == mono(2, {{1, 1}}, {{2, 1}}));
    CHECK(mixed[2] == mono(2, {{2, 1}}, {{1, 1}}));
    CHECK(mixed[3] == mono(2, {{2, 1}}, {{2, 1}}));

    CHECK(enumerate_monomials(2, 2, Purity::All).size() == 10);  // C(5,2)
    auto pure = enumerate_monomials(1, 3, Purity::PureX);
    REQUIRE(pure.size() == 1);
    CHECK(pure[0] == mono(1, {{1, 3}}, {}));

    // cardinality C(2k+m-1, m) and purity partition
    for (int k = 1; k <= 4; ++k)
        for (int m = 1; m <= 5; ++m) {
            auto all = enumerate_monomials(k, m, Purity::All);
            CHECK(Int(static_cast<long>(all.size())) ==
                  binomial(static_cast<unsigned long>(2 * k + m - 1),
                           static_cast<unsigned long>(m)));
            std::size_t px = enumerate_monomials(k, m, Purity::PureX).size();
            std::size_t py = enumerate_monomials(k, m, Purity::PureY).size();
            std::size_t mx = enumerate_monomials(k, m, Purity::Mixed).size();
            CHECK(px + py + mx == all.size());
            // strictly increasing in canonical order, hence no duplicates
            CHECK(std::is_sorted(all.begin(), all.end(),
                                 [](const Monomial& a, const Monomial& b) { return a < b; }));
            for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
        }
}

TEST_CASE("mixed weighted degrees fill the chi interval exactly") {
    for (int k = 2; k <= 5; ++k)
        for (int m = 2; m <= 6; ++m) {
            std::set<long long> degrees;
            for (const Monomial& mon : enumerate_monomials(k, m, Purity::Mixed))
                degrees.insert(mon.weighted_degree());
            long long top = static_cast<long long>(k) * (m - 1) - 1;
            CHECK(degrees.size() == static_cast<std::size_t>(2 * top + 1));
            CHECK(*degrees.begin() == -top);
            CHECK(*degrees.rbegin() == top);
        }
}

TEST_CASE("occurrences") {
    std::vector<Monomial> b1{mono(2, {{2, 1}}, {{1, 1}}), mono(2, {{1, 1}}, {{1, 1}}),
                             mono(2, {{1, 1}}, {{2, 1}})};
    OccurrenceVector occ = occurrences(b1);
    CHECK(occ.x == std::vector<Int>{2, 1});
    CHECK(occ.y == std::vector<Int>{2, 1});

    OccurrenceVector empty = occurrences({}, 3);
    CHECK(empty.x == std::vector<Int>{0, 0, 0});
    CHECK(empty.y == std::vector<Int>{0, 0, 0});

    // B_2 at k=3: {x_3y_1, x_3y_2, x_3y_3, x_2y_3, x_1y_3}
    std::vector<Monomial> b2{mono(3, {{3, 1}}, {{1, 1}}), mono(3, {{3, 1}}, {{2, 1}}),
                             mono(3, {{3, 1}}, {{3, 1}}), mono(3, {{2, 1}}, {{3, 1}}),
                             mono(3, {{1, 1}}, {{3, 1}})};
    OccurrenceVector occ2 = occurrences(b2);
    CHECK(occ2.x == std::vector<Int>{1, 1, 3});
    CHECK(occ2.y == std::vector<Int>{1, 1, 3});
}

TEST_CASE("rho weight is additive over occurrence vectors") {
    SplitMix64 gen(41);
    for (int trial = 0; trial < 50; ++trial) {
        int k = 2 + static_cast<int>(gen.uniform(0, 3));
        auto all = enumerate_monomials(k, 3, Purity::All);
        std::vector<Monomial> multiset;
        for (int i = 0; i < 12; ++i)
            multiset.push_back(all[static_cast<std::size_t>(
                gen.uniform(0, static_cast<long long>(all.size()) - 1))]);
        RhoWeights r = random_rho(k, gen, 100, false);
        Int direct = 0;
        for (const auto& m : multiset) direct += rho_weight(m, r);
        CHECK(direct == rho_weight(occurrences(multiset), r));
        CHECK(occurrences(multiset).total() == Int(3 * 12));
    }
}

TEST_CASE("iota-swap identity for rho weights") {
    SplitMix64 gen(42);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 2 + static_cast<int>(gen.uniform(0, 3));
        RhoWeights r = random_rho(k, gen, 1000, true);
        REQUIRE(r.trace_zero());
        auto all = enumerate_monomials(k, 4, Purity::All);
        const Monomial& m = all[static_cast<std::size_t>(
            gen.uniform(0, static_cast<long long>(all.size()) - 1))];
        CHECK(rho_weight(m.involution(), r.swapped()) == rho_weight(m, r));
    }
}

TEST_CASE("text form round trip") {
    CHECK(mono(3, {{1, 2}}, {{3, 1}}).str() == "x1^2*y3");
    CHECK(Monomial::parse("x1^2*y3", 3) == mono(3, {{1, 2}}, {{3, 1}}));
    CHECK(Monomial::parse("y3*x1*x1", 3) == mono(3, {{1, 2}}, {{3, 1}}));
    CHECK(Monomial::parse("1", 4) == Monomial::one(4));
    CHECK(Monomial::one(4).str() == "1");
    CHECK(Monomial::parse(" x2 * y1 ^ 3 ", 2) == mono(2, {{2, 1}}, {{1, 3}}));

    CHECK_THROWS_AS(Monomial::parse("z1", 2), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse("x3", 2), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse("x1^-2", 2), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse("x1**y1", 2), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse("", 2), std::invalid_argument);

    SplitMix64 gen(7);
    for (int k = 1; k <= 4; ++k)
        for (const Monomial& m : enumerate_monomials(k, 4, Purity::All))
            CHECK(Monomial::parse(m.str(), k) == m);
}

TEST_CASE("degree zero monomial is pure in both senses") {
    Monomial one = Monomial::one(3);
    CHECK(one.degree() == 0);
    CHECK(one.pure_x());
    CHECK(one.pure_y());
    CHECK(!one.mixed());
}

TEST_CASE("trace zero validation") {
    RhoWeights r(2, {3, -1}, {-1, -1});
    CHECK(r.trace_zero());
    CHECK(RhoWeights(2, {1, 0}, {0, 0}).trace() == 1);
    CHECK(r.swapped().lambda == std::vector<Int>{-1, -1});
    CHECK(RhoWeights::from_flat(2, {1, 2, 3, -6}).nu == std::vector<Int>{3, -6});
}
