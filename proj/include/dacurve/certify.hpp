#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dacurve/chi.hpp"
#include "dacurve/monomial.hpp"
#include "dacurve/rnc.hpp"
#include "dacurve/rng.hpp"
#include "dacurve/sections.hpp"
#include "dacurve/selection.hpp"

namespace dacurve::stab {

// All degree-m monomials partitioned by the pluricanonical basis element
// their product realizes. A full monomial basis picks one member per class.
struct ClassSystem {
    int k = 0, m = 0;

    struct ClassEntry {
        sections::PluriLabel label;
        std::vector<Monomial> members;  // canonical order
    };
    std::vector<ClassEntry> classes;  // omega block, eta block, chi block

    static ClassSystem build(int k, int m);  // k >= 2, m >= 2

    std::size_t num_classes() const { return classes.size(); }
    // Forced by summing the barycenter equation over coordinates: every
    // member contributes degree m, so the constant target is m*C/(2k).
    Rat barycenter_target() const;
};

struct MinBasisResult {
    std::vector<Monomial> basis;
    Int weight = 0;
};

// Reusable exact min-basis engine over a class system.
class BasisSelector {
public:
    explicit BasisSelector(const ClassSystem& sys);
    MinBasisResult min_basis(const RhoWeights& r) const;  // trace-zero r

    const ClassSystem& system() const { return *sys_; }
    GroupedSelector::Selection raw_select(const std::vector<Int>& w) const;

private:
    const ClassSystem* sys_;
    GroupedSelector selector_;
};

MinBasisResult min_weight_basis(const ClassSystem& sys, const RhoWeights& r);

// Either a semistable witness (per-class convex weights whose exponent
// barycenters sum to the constant vector) or a destabilizing trace-zero
// one-parameter subgroup with positive minimal basis weight.
struct StabilityCertificate {
    enum class Verdict { Semistable, NonSemistable };
    Verdict verdict = Verdict::Semistable;
    int k = 0, m = 0;
    Rat t;
    // Semistable: witness[c][j] is the coefficient of member j of class c.
    std::vector<std::vector<Rat>> witness;
    // Non-semistable: the separating subgroup and its min-basis weight.
    std::optional<RhoWeights> destabilizer;
    Int destabilizer_weight = 0;
};

// Decides the barycenter LP exactly. The per-class structure is exploited
// by generating minimal bases as cutting planes for the equivalent
// trace-zero max-min problem; the core LPs run on the exact simplex. A
// semistable verdict returns convex weights verified against the barycenter
// equation, a non-semistable verdict returns the separating subgroup
// re-verified through an independent min-basis computation.
StabilityCertificate certify(const ClassSystem& sys);

// Re-checks a certificate from scratch, independent of the solver path.
bool verify_certificate(const StabilityCertificate& cert, const ClassSystem& sys,
                        std::string* reason = nullptr);

// The constructive route: Kempf-minimal bases on the pure-x and pure-y
// blocks plus a non-positive chi-basis. Total weight is asserted to be
// non-positive for every trace-zero rho.
MinBasisResult constructive_basis(int k, int m, const RhoWeights& r);

// Constructive route with the pure-block selector and the chi families
// built once, for bulk evaluation.
class ConstructiveEngine {
public:
    ConstructiveEngine(int k, int m);
    MinBasisResult build(const RhoWeights& r, std::string* dispatch = nullptr) const;
    Int weight(const RhoWeights& r) const;  // skips basis assembly

private:
    int k_, m_;
    rnc::RncSelector rnc_;
    chi::NonpositiveChiEngine chi_;
};

// Random trace-zero integer weights: entries uniform in [-bound, bound],
// trace repaired on the last coordinate.
RhoWeights random_trace_zero(int k, SplitMix64& gen, long long bound);

struct FuzzReport {
    int trials = 0;
    std::uint64_t seed = 0;
    long long bound = 0;
    Int max_weight;
    int argmax_trial = -1;
    std::optional<RhoWeights> argmax_rho;
    bool all_nonpositive = false;
};

// Seed-deterministic sampling of min-basis weights. Trial streams derive
// from (seed, trial), so the report does not depend on `jobs`. An injected
// rho, when given, replaces trial 0. `entry_bound` overrides the default
// sampling bound B = 10*k*m when positive.
FuzzReport fuzz(const ClassSystem& sys, int trials, std::uint64_t seed, int jobs = 1,
                const std::optional<RhoWeights>& inject = std::nullopt,
                long long entry_bound = 0);

// Exact max-min over every full monomial basis (enumerated), for systems
// with at most `limit` bases. Value 0 certifies semistability by vertex
// enumeration.
Rat exhaustive_max_min(const ClassSystem& sys, std::size_t limit);

}  // namespace dacurve::stab
