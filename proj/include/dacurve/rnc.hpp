#pragma once

#include <utility>
#include <vector>

#include "dacurve/monomial.hpp"
#include "dacurve/selection.hpp"

namespace dacurve::rnc {

// Degree-m pure-x monomials bucketed by the index sum (i-1)*a_i, i.e. the
// grading of the rational normal curve factor. Classes cover every index in
// [0, m(k-1)] and partition the pure-x monomials.
struct RncClassSystem {
    int k = 0, m = 0;
    std::vector<std::vector<Monomial>> classes;  // index j -> members, canonical order

    long long num_classes() const { return static_cast<long long>(classes.size()); }
};

RncClassSystem rnc_classes(int k, int m);  // k >= 2, m >= 1

// One monomial per class minimizing sum a_i * lambda_i; lambda need not be
// trace-zero (the caller centers it when needed).
struct RncSelection {
    std::vector<Monomial> basis;
    Int weight = 0;
};
RncSelection min_weight_rnc_basis(const RncClassSystem& sys, const std::vector<Int>& lambda);

// Selection engine with the class rows flattened once, for bulk evaluation.
class RncSelector {
public:
    explicit RncSelector(RncClassSystem sys);
    const RncClassSystem& system() const { return sys_; }
    RncSelection select(const std::vector<Int>& lambda) const;
    Int weight(const std::vector<Int>& lambda) const;  // skips basis assembly

private:
    RncClassSystem sys_;
    GroupedSelector selector_;
};

// Kempf's bound for the rational normal curve: the minimum weight is at most
// m(m(k-1)+1) * mean(lambda), exactly in rational arithmetic. Equivalently
// the minimum for the centered vector is non-positive. A violation would be
// a counterexample to the bound and raises std::logic_error.
struct KempfReport {
    int k = 0, m = 0;
    std::vector<Int> lambda;
    Int min_weight = 0;
    Rat bound;  // m(m(k-1)+1) * sum(lambda)/k
    bool pass = false;
};
KempfReport kempf_bound_check(int k, int m, const std::vector<Int>& lambda);

// All one-per-class selection sums (the vertices of the state polytope seen
// by the selection LP), deduplicated. Only valid when the number of
// selections is at most `limit`.
std::vector<std::vector<Int>> enumerate_selection_sums(const RncClassSystem& sys,
                                                       std::size_t limit);

}  // namespace dacurve::rnc
