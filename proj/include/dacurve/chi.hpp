#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dacurve/monomial.hpp"
#include "dacurve/selection.hpp"

namespace dacurve::chi {

// A chi-basis: 2k(m-1)-1 mixed degree-m monomials realizing every weighted
// degree in [-k(m-1)+1, k(m-1)-1] exactly once.
struct ChiBasis {
    int k = 0, m = 0;
    std::vector<Monomial> mons;  // canonical order

    Int weight(const RhoWeights& r) const;
};

struct ValidityReport {
    bool valid = false;
    long long expected_size = 0;
    long long actual_size = 0;  // distinct elements
    std::vector<Monomial> not_mixed;
    std::vector<Monomial> wrong_degree;
    std::vector<long long> missing_degrees;
    std::vector<long long> duplicated_degrees;
};
ValidityReport is_chi_basis(const std::vector<Monomial>& candidate, int k, int m);

// m = 2 families. B_1 has weight -(lambda_k+nu_k), B_2 has weight
// (k-1)(lambda_k+nu_k); one of the two is always non-positive.
ChiBasis family_B(int k, int variant);  // variant 1 or 2

// m >= 3, T route: T_1 holds every mixed degree-m monomial of the ideal
// generated by the x_k/y_k-heavy products; it misses exactly the weighted
// degrees k(m-3), k(m-5), ..., -k(m-3), which T_2(s) (or its mirror) fills.
std::vector<Monomial> family_T1(int k, int m);
std::vector<long long> t1_missing_degrees(int k, int m);
enum class TVariant { Plain, Mirrored };
ChiBasis family_T(int k, int m, int s, TVariant variant);

// m >= 3, S route: S_1 covers the high weighted degrees, iota(S_1) the low
// ones, S_2(s) the middle band. For odd k >= 5 the quoted S_1 listing
// contains entries of the wrong total degree; the shipped family applies
// the minimal degree-restoring correction and family_S_repairs records the
// exact diff. `literal` reproduces the uncorrected listing.
std::vector<Monomial> family_S1(int k, int m, bool literal = false);
std::vector<Monomial> family_S2(int k, int m, int s);
ChiBasis family_S(int k, int m, int s, bool mirrored);

struct Repair {
    Monomial removed, added;
    std::string note;
};
std::vector<Repair> family_S_repairs(int k, int m);

// Occurrence-count form of a family weight. When the counts are symmetric
// (x_i and y_i agree) and uniform below k, the weight of the multiset is
// c_top*(lambda_k+nu_k) + c_rest*sum_{i<k}(lambda_i+nu_i) for every rho,
// hence (c_top - c_rest)*(lambda_k+nu_k) on trace-zero weights.
struct WeightDecomposition {
    Int c_top = 0, c_rest = 0;
    bool symmetric = false;
    bool uniform = false;
};
WeightDecomposition weight_decomposition(const OccurrenceVector& occ);

struct FamilyReport {
    std::string family;
    int k = 0, m = 0, s = 0;  // s = 0 when not applicable
    ChiBasis basis;
    ValidityReport validity;
    OccurrenceVector occ{1};
    WeightDecomposition decomp;
    std::vector<Repair> repairs;
    std::string note;
};
FamilyReport report_family(const std::string& family, int k, int m, int s);

// Exact per-degree minimum selection. Build once per (k, m) and reuse for
// bulk evaluation.
class ChiSelector {
public:
    ChiSelector(int k, int m);  // k >= 2, m >= 2
    int k() const { return k_; }
    int m() const { return m_; }
    std::pair<ChiBasis, Int> min_basis(const RhoWeights& r) const;
    Int min_weight(const RhoWeights& r) const;  // skips basis assembly

private:
    int k_, m_;
    std::vector<std::vector<Monomial>> by_degree_;  // ascending weighted degree
    GroupedSelector selector_;
};

// Global minimum over all chi-bases (selection decomposes per degree).
std::pair<ChiBasis, Int> min_weight_chi_basis(int k, int m, const RhoWeights& r);

// A chi-basis of non-positive weight: sign dispatch between B_1/B_2 at
// m = 2, the T/S routes at m >= 3, exact minimum as a fallback. A fallback
// with positive weight would contradict the non-positive-basis theorem and
// raises std::logic_error.
ChiBasis nonpositive_chi_basis(int k, int m, const RhoWeights& r,
                               std::string* dispatch_note = nullptr);

// Same dispatch with the families and the fallback selector built once;
// for bulk evaluation.
class NonpositiveChiEngine {
public:
    NonpositiveChiEngine(int k, int m);
    ChiBasis basis(const RhoWeights& r, std::string* dispatch_note = nullptr) const;
    // the weight of the basis the dispatch would return, without copying it
    Int weight(const RhoWeights& r) const;
    const ChiSelector& selector() const { return selector_; }

private:
    const ChiBasis* dispatch(const RhoWeights& r, std::string* note, Int* weight) const;

    int k_, m_;
    // routes scanned in sign-dependent order; at m = 2 these are B_1 / B_2
    std::vector<std::pair<std::string, ChiBasis>> t_route_, s_route_;
    ChiSelector selector_;
};

// Combined occurrence identities over all 2(k-1) bases of each route.
struct SignIdentity {
    OccurrenceVector t_occ{1}, s_occ{1};
    WeightDecomposition t_decomp, s_decomp;
    Int t_multiple = 0;  // c_top - c_rest for the T route (positive)
    Int s_multiple = 0;  // same for the S route (negative)
};
SignIdentity family_sign_identity(int k, int m);

// Actual combined S-route counts against the quoted closed forms. The
// quoted x_k count for odd k disagrees with the constructed families (a
// total-degree count shows the quoted value is not self-consistent); the
// audit reports both values rather than guessing the intended constant.
struct SRouteAudit {
    Int actual_top = 0, quoted_top = 0;      // x_k (= y_k) occurrences
    Int actual_other = 0, quoted_other = 0;  // each remaining variable
    bool top_matches = false;
    bool other_matches = false;
};
SRouteAudit s_route_occurrence_audit(int k, int m);

}  // namespace dacurve::chi
