#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dacurve/common.hpp"

namespace dacurve {

enum class Purity { PureX, PureY, Mixed, All };

// A monomial in x_1..x_k, y_1..y_k, stored as its exponent vectors.
// Immutable after construction. The weighted degree is the grading
// deg(x_i) = i, deg(y_i) = -i induced by the torus action on the curve.
class Monomial {
public:
    Monomial(int k, std::vector<int> a, std::vector<int> b);

    static Monomial one(int k);
    static Monomial var_x(int k, int i);  // x_i, 1-based
    static Monomial var_y(int k, int i);  // y_i, 1-based
    // Convenience builder: from_powers(3, {{3,2}}, {{1,1}}) = x_3^2 * y_1.
    static Monomial from_powers(int k,
                                const std::vector<std::pair<int, int>>& xs,
                                const std::vector<std::pair<int, int>>& ys);

    int k() const { return k_; }
    int degree() const;
    int ax(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
    int by(int i) const { return b_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& a() const { return a_; }
    const std::vector<int>& b() const { return b_; }

    bool pure_x() const;  // no y factor (degree-0 counts as both pure kinds)
    bool pure_y() const;
    bool mixed() const;

    long long weighted_degree() const;  // sum i*a_i - sum i*b_i
    long long omega_index() const;      // sum (i-1)*a_i
    long long eta_index() const;        // sum (i-1)*b_i

    Monomial involution() const;  // exchange x_i and y_i
    Monomial operator*(const Monomial& rhs) const;

    bool operator==(const Monomial& rhs) const = default;

    // Canonical order: grade by total degree, then lexicographic with
    // x_1 > x_2 > ... > x_k > y_1 > ... > y_k, a larger exponent on an
    // earlier variable sorting first. enumerate_monomials emits exactly
    // this order, and every tie-break in the library takes the least
    // element under it.
    bool operator<(const Monomial& rhs) const;

    std::string str() const;
    // Accepts factors in any order, '^' exponents (default 1), '*' between
    // factors, e.g. "x1^2*y3". "1" is the degree-0 monomial.
    static Monomial parse(const std::string& text, int k);

private:
    int k_;
    std::vector<int> a_, b_;
};

// A diagonal one-parameter subgroup: integer weights lambda_i on x_i and
// nu_i on y_i. Landing in SL requires trace zero; construction does not
// force it since intermediate vectors (e.g. the pure-x weights fed to the
// rational-normal-curve selection) are not normalized.
struct RhoWeights {
    int k;
    std::vector<Int> lambda, nu;

    RhoWeights(int k_in, std::vector<Int> lambda_in, std::vector<Int> nu_in);

    Int trace() const;
    bool trace_zero() const { return trace() == 0; }
    RhoWeights swapped() const;  // exchange lambda and nu
    // Flat layout (lambda_1..lambda_k, nu_1..nu_k).
    std::vector<Int> flat() const;
    static RhoWeights from_flat(int k, const std::vector<Int>& w);
};

// Total occurrences of each variable across a multiset of monomials.
struct OccurrenceVector {
    std::vector<Int> x, y;

    explicit OccurrenceVector(int k)
        : x(static_cast<std::size_t>(k)), y(static_cast<std::size_t>(k)) {}
    int k() const { return static_cast<int>(x.size()); }
    Int total() const;
    bool operator==(const OccurrenceVector&) const = default;
};

Int rho_weight(const Monomial& m, const RhoWeights& r);
Int rho_weight(const OccurrenceVector& occ, const RhoWeights& r);

// Every degree-m monomial of the requested purity, each exactly once, in
// canonical order.
std::vector<Monomial> enumerate_monomials(int k, int m, Purity purity);

OccurrenceVector occurrences(const std::vector<Monomial>& ms, int k);
OccurrenceVector occurrences(const std::vector<Monomial>& ms);  // k from front()

}  // namespace dacurve
