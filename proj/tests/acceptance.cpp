// Acceptance suite: one line per criterion, exit code = number of failures.
// Every tolerance is exact (integer or rational equality); timing gates are
// wall-clock seconds.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "dacurve/certify.hpp"
#include "dacurve/chi.hpp"
#include "dacurve/lp.hpp"
#include "dacurve/rnc.hpp"
#include "dacurve/sections.hpp"
#include "dacurve/slope.hpp"

using namespace dacurve;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void note(const std::string& what) { notes.push_back(what); }
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t grid_seed(int k, int m) {
    return 0xACCE5500ULL + static_cast<std::uint64_t>(k) * 100 + static_cast<std::uint64_t>(m);
}

// ---------------------------------------------------------------- criterion 1
Outcome criterion_certify_grid() {
    Outcome out;
    double worst = 0;
    for (int k = 2; k <= 5; ++k)
        for (int m = 2; m <= 6; ++m) {
            auto t0 = std::chrono::steady_clock::now();
            auto sys = stab::ClassSystem::build(k, m);
            auto cert = stab::certify(sys);
            double elapsed = seconds_since(t0);
            worst = std::max(worst, elapsed);
            if (cert.verdict != stab::StabilityCertificate::Verdict::Semistable)
                out.fail("(k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                         ") not semistable");
            std::string reason;
            if (!stab::verify_certificate(cert, sys, &reason))
                out.fail("(k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                         ") witness rejected: " + reason);
            if (elapsed >= 60.0)
                out.fail("(k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                         ") exceeded 60 s: " + std::to_string(elapsed));
        }
    std::ostringstream note;
    note << "20/20 instances, max " << std::fixed << std::setprecision(2) << worst << " s";
    out.note(note.str());
    return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome criterion_nonpositive_bases() {
    Outcome out;
    const int trials = 10000;
    long long violations = 0;
    for (int k = 2; k <= 5; ++k)
        for (int m = 2; m <= 6; ++m) {
            chi::ChiSelector chi_sel(k, m);
            stab::ConstructiveEngine builder(k, m);
            const long long bound = 10LL * k * m;
            for (int trial = 0; trial < trials; ++trial) {
                SplitMix64 gen = SplitMix64::stream(grid_seed(k, m),
                                                    static_cast<std::uint64_t>(trial));
                RhoWeights r = stab::random_trace_zero(k, gen, bound);
                if (chi_sel.min_weight(r) > 0) {
                    ++violations;
                    out.fail("positive chi minimum at (k=" + std::to_string(k) + ", m=" +
                             std::to_string(m) + "), trial " + std::to_string(trial));
                }
                try {
                    if (builder.weight(r) > 0) ++violations;
                } catch (const std::logic_error& e) {
                    ++violations;
                    out.fail(std::string("constructive violation: ") + e.what());
                }
            }
        }
    out.note(std::to_string(trials) + " trials per grid point, " +
             std::to_string(violations) + " violations");
    return out;
}

// ---------------------------------------------------------------- criterion 3
Outcome criterion_m2_identities() {
    Outcome out;
    SplitMix64 gen(0xB1B2ULL);
    for (int k = 2; k <= 10; ++k) {
        auto b1 = chi::family_B(k, 1);
        auto b2 = chi::family_B(k, 2);
        auto d1 = chi::weight_decomposition(occurrences(b1.mons, k));
        auto d2 = chi::weight_decomposition(occurrences(b2.mons, k));
        if (!(d1.symmetric && d1.uniform && d1.c_top == 1 && d1.c_rest == 2))
            out.fail("B1 occurrence decomposition wrong at k=" + std::to_string(k));
        if (!(d2.symmetric && d2.uniform && d2.c_top == k && d2.c_rest == 1))
            out.fail("B2 occurrence decomposition wrong at k=" + std::to_string(k));
        // exact weight identities on random trace-zero vectors
        for (int trial = 0; trial < 200; ++trial) {
            RhoWeights r = stab::random_trace_zero(k, gen, 1000);
            Int top = r.lambda[static_cast<std::size_t>(k - 1)] +
                      r.nu[static_cast<std::size_t>(k - 1)];
            if (b1.weight(r) != -top)
                out.fail("weight(B1) != -(lambda_k+nu_k) at k=" + std::to_string(k));
            if (b2.weight(r) != (k - 1) * top)
                out.fail("weight(B2) != (k-1)(lambda_k+nu_k) at k=" + std::to_string(k));
        }
    }
    out.note("k <= 10, tolerance zero");
    return out;
}

// ---------------------------------------------------------------- criterion 4
Outcome criterion_family_suite() {
    Outcome out;
    for (int k = 2; k <= 6; ++k)
        for (int m = 3; m <= 6; ++m) {
            for (int s = 1; s <= k - 1; ++s) {
                auto id = [&](const std::string& f) {
                    return f + "(k=" + std::to_string(k) + ",m=" + std::to_string(m) +
                           ",s=" + std::to_string(s) + ")";
                };
                if (!chi::is_chi_basis(chi::family_T(k, m, s, chi::TVariant::Plain).mons, k, m).valid)
                    out.fail(id("T2") + " invalid");
                if (!chi::is_chi_basis(chi::family_T(k, m, s, chi::TVariant::Mirrored).mons, k, m).valid)
                    out.fail(id("T2'") + " invalid");
                if (!chi::is_chi_basis(chi::family_S(k, m, s, false).mons, k, m).valid)
                    out.fail(id("S") + " invalid");
                if (!chi::is_chi_basis(chi::family_S(k, m, s, true).mons, k, m).valid)
                    out.fail(id("S'") + " invalid");
            }

            // T_1 misses exactly k(m-3), k(m-5), ..., -k(m-3)
            std::set<long long> have;
            for (const Monomial& mon : chi::family_T1(k, m)) have.insert(mon.weighted_degree());
            std::vector<long long> missing;
            const long long top = static_cast<long long>(k) * (m - 1) - 1;
            for (long long d = -top; d <= top; ++d)
                if (!have.count(d)) missing.push_back(d);
            auto claimed = chi::t1_missing_degrees(k, m);
            std::sort(claimed.begin(), claimed.end());
            if (missing != claimed)
                out.fail("T1 missed degrees differ at (k=" + std::to_string(k) + ", m=" +
                         std::to_string(m) + ")");

            // combined occurrence identities
            auto sign = chi::family_sign_identity(k, m);
            if (!(sign.t_decomp.symmetric && sign.t_decomp.uniform))
                out.fail("T union not symmetric/uniform");
            if (!(sign.t_occ.x.back() > sign.t_occ.x.front()))
                out.fail("T union: count(x_k) <= count(x_1)");
            if (!sign.s_decomp.symmetric) out.fail("S union not iota-symmetric");
            if (!(sign.s_occ.x.back() < sign.s_occ.x.front()))
                out.fail("S union: count(x_k) >= count(x_1)");
            if (!(sign.t_multiple > 0)) out.fail("T multiple not positive");
            if (!(sign.s_multiple < 0)) out.fail("S multiple not negative");

            // quoted-vs-shipped diffs: the odd-k S_1 rows
            auto repairs = chi::family_S_repairs(k, m);
            if (k == 5) {
                // ell = 2: the quoted interior row of S_1 replaces
                // x_3^{m-1} y_1 by x_3^{m-2} y_1 and (for m >= 4)
                // x_3^{m-2} x_2 y_1 by x_3^{m-1} x_2 y_2.
                std::set<Monomial> removed, added;
                for (const auto& r : repairs) {
                    removed.insert(r.removed);
                    added.insert(r.added);
                }
                std::set<Monomial> expect_removed{
                    Monomial::from_powers(5, {{3, m - 2}}, {{1, 1}})};
                std::set<Monomial> expect_added{
                    Monomial::from_powers(5, {{3, m - 1}}, {{1, 1}})};
                if (m >= 4) {
                    expect_removed.insert(
                        Monomial::from_powers(5, {{3, m - 1}, {2, 1}}, {{2, 1}}));
                    expect_added.insert(
                        Monomial::from_powers(5, {{3, m - 2}, {2, 1}}, {{1, 1}}));
                }
                if (removed != expect_removed || added != expect_added)
                    out.fail("unexpected repair diff at (k=5, m=" + std::to_string(m) + ")");
            } else if (!repairs.empty()) {
                out.fail("unexpected repairs at (k=" + std::to_string(k) + ", m=" +
                         std::to_string(m) + ")");
            }
        }

    // quoted omega_1 exponent flagged by the section audit
    for (int k = 2; k <= 6; ++k)
        for (int m = 3; m <= 6; ++m) {
            bool flagged = false;
            for (const auto& e : sections::exponent_audit(k, m))
                if (!e.consistent && e.quoted_exponent == 2 * m - 1 &&
                    e.constructed_exponent == 2 * m + 1)
                    flagged = true;
            if (!flagged)
                out.fail("omega_1 exponent discrepancy not reported at (k=" +
                         std::to_string(k) + ", m=" + std::to_string(m) + ")");
        }
    out.note("k <= 6, m in 3..6, all s; diffs reported for odd-k S_1 and omega_1");
    return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome criterion_section_algebra() {
    Outcome out;
    for (int k = 2; k <= 6; ++k)
        for (int m = 2; m <= 6; ++m) {
            auto basis = sections::pluricanonical_basis(k, m);
            if (basis.size() != static_cast<std::size_t>((2 * m - 1) * (2 * k - 1)))
                out.fail("dimension failure at (k=" + std::to_string(k) + ", m=" +
                         std::to_string(m) + ")");
            for (const auto& ls : basis) {
                auto c = sections::classify_monomial(ls.witness, m);
                if (!(c.label == ls.label) ||
                    !(sections::section_of_monomial(ls.witness) == ls.section.scaled(c.scalar)))
                    out.fail("witness mismatch for " + ls.label.str());
            }
        }
    for (int k = 3; k <= 6; ++k) {
        auto rep = sections::scroll_minor_check(k);
        if (!rep.all_zero || rep.skipped) out.fail("minor failure at k=" + std::to_string(k));
        if (rep.minors.size() != static_cast<std::size_t>((2 * k - 2) * (2 * k - 3) / 2))
            out.fail("minor count wrong at k=" + std::to_string(k));
    }
    for (int k = 2; k <= 6; ++k)
        if (!sections::cotangent_span_check(k).pass())
            out.fail("cotangent span failure at k=" + std::to_string(k));
    for (int k = 2; k <= 50; ++k) {
        auto tw = sections::torus_weights(k);
        if (!tw.multiplicity_free || tw.weights.size() != 2 * static_cast<std::size_t>(k))
            out.fail("torus weights not distinct at k=" + std::to_string(k));
    }
    out.note("bases k,m <= 6 with witnesses; minors 3 <= k <= 6; spans k <= 6; torus k <= 50");
    return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome criterion_kempf_bound() {
    Outcome out;
    const int trials = 10000;
    long long checked = 0;
    for (int k = 2; k <= 5; ++k)
        for (int m = 2; m <= 6; ++m) {
            rnc::RncSelector sel(rnc::rnc_classes(k, m));
            const long long bound_entries = 10LL * k * m;
            const Int scale = Int(m) * (Int(m) * (k - 1) + 1);
            for (int trial = 0; trial < trials; ++trial) {
                SplitMix64 gen = SplitMix64::stream(grid_seed(k, m) ^ 0x6EULL,
                                                    static_cast<std::uint64_t>(trial));
                std::vector<Int> lambda;
                Int sum = 0;
                for (int i = 0; i < k; ++i) {
                    lambda.emplace_back(static_cast<long>(gen.uniform(-bound_entries, bound_entries)));
                    sum += lambda.back();
                }
                // min_weight <= m(m(k-1)+1) * sum/k, exactly
                Int min_weight = sel.weight(lambda);
                if (!(min_weight * k <= scale * sum))
                    out.fail("bound violated at (k=" + std::to_string(k) + ", m=" +
                             std::to_string(m) + "), trial " + std::to_string(trial));
                ++checked;
            }
        }
    // exact vertex-enumeration: centered maximum is 0
    for (int k = 2; k <= 3; ++k)
        for (int m = 1; m <= 4; ++m) {
            auto sums = rnc::enumerate_selection_sums(rnc::rnc_classes(k, m), 100000);
            if (lp::max_min_trace_zero(sums).value != 0)
                out.fail("centered maximum nonzero at (k=" + std::to_string(k) + ", m=" +
                         std::to_string(m) + ")");
        }
    out.note(std::to_string(checked) + " random weight vectors; vertex enumeration k <= 3, m <= 4");
    return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome criterion_slope_calculators() {
    Outcome out;
    // sign equivalence as stated: weight_bound > 0 <=> m <= (g-3)/2
    std::vector<std::string> counterexamples;
    for (int g = 4; g <= 24; ++g)
        for (int m = 2; m <= 10; ++m) {
            bool positive = slope::bielliptic_weight_bound(g, m) > 0;
            bool threshold = 2 * m <= g - 3;
            if (positive != threshold)
                counterexamples.push_back("(g=" + std::to_string(g) + ", m=" +
                                          std::to_string(m) + ", bound=" +
                                          slope::bielliptic_weight_bound(g, m).get_str() + ")");
        }
    if (!counterexamples.empty()) {
        std::string list;
        for (const auto& c : counterexamples) list += (list.empty() ? "" : ", ") + c;
        out.fail("sign equivalence fails at " + std::to_string(counterexamples.size()) +
                 " grid points: " + list);
        out.note("the bound is positive on the even-genus line g = 2m+2 (m >= 3) although "
                 "m > (g-3)/2 there; the stated equivalence only holds one way");
    }

    // the two algebraic forms agree identically
    for (int g = 4; g <= 24; ++g)
        for (int m = 2; m <= 10; ++m) {
            Int gz(g), mz(m);
            Int a = (gz - 1) * ((gz + 1) * mz - 2 * mz * mz - gz);
            Int b = (mz - 1) * (gz - 1) * (gz - mz) - mz * (mz * (gz - 1));
            if (a != b || slope::bielliptic_weight_bound(g, m) != a)
                out.fail("forms disagree at (g=" + std::to_string(g) + ", m=" +
                         std::to_string(m) + ")");
        }

    // polarization slope at m = 3
    for (int g = 2; g <= 60; ++g)
        if (slope::polarization_slope(g, 3).normalized != make_rat(22, 3) + make_rat(5, Int(g)))
            out.fail("m=3 slope mismatch at g=" + std::to_string(g));

    // trigonal comparison <=> (g-3)(2g-5) >= 0
    for (int g = 3; g <= 60; ++g) {
        auto c = slope::trigonal_comparison(g);
        if (c.trigonal_at_most_slope != (c.discriminant >= 0))
            out.fail("trigonal comparison mismatch at g=" + std::to_string(g));
    }
    if (out.pass) out.note("bielliptic table g in 4..24, m in 2..10; slopes exact");
    return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome criterion_solver_soundness() {
    Outcome out;
    // synthetic single-class system: one pure power of x_1
    stab::ClassSystem toy;
    toy.k = 2;
    toy.m = 2;
    toy.classes.push_back({sections::PluriLabel{sections::PluriLabel::Kind::Omega, 0},
                           {Monomial::from_powers(2, {{1, 2}}, {})}});
    auto cert = stab::certify(toy);
    if (cert.verdict != stab::StabilityCertificate::Verdict::NonSemistable)
        out.fail("toy system not recognized as non-semistable");
    else {
        if (!cert.destabilizer || !cert.destabilizer->trace_zero())
            out.fail("destabilizer missing or not trace-zero");
        else {
            Int recomputed = stab::min_weight_basis(toy, *cert.destabilizer).weight;
            if (!(recomputed > 0) || recomputed != cert.destabilizer_weight)
                out.fail("destabilizer weight fails recomputation");
        }
        std::string reason;
        if (!stab::verify_certificate(cert, toy, &reason)) out.fail("toy certificate rejected");
    }

    // tampered certificates are rejected
    auto sys = stab::ClassSystem::build(2, 2);
    auto good = stab::certify(sys);
    std::string reason;
    if (!stab::verify_certificate(good, sys, &reason)) out.fail("genuine witness rejected");
    auto tampered = good;
    tampered.witness[0][0] += make_rat(1, 9);
    if (stab::verify_certificate(tampered, sys, &reason))
        out.fail("perturbed witness accepted");
    auto bad_weight = cert;
    bad_weight.destabilizer_weight += 1;
    if (stab::verify_certificate(bad_weight, toy, &reason))
        out.fail("perturbed destabilizer weight accepted");
    out.note("toy destabilizer re-verified; tampered certificates rejected");
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"criterion 1: semistability certificates on the full grid", criterion_certify_grid},
        {"criterion 2: non-positive chi and constructive bases under random subgroups",
         criterion_nonpositive_bases},
        {"criterion 3: exact m=2 occurrence identities", criterion_m2_identities},
        {"criterion 4: T/S family suite with reported diffs", criterion_family_suite},
        {"criterion 5: section algebra (dimension, minors, spans, torus)",
         criterion_section_algebra},
        {"criterion 6: Kempf bound and centered worst case", criterion_kempf_bound},
        {"criterion 7: bielliptic and slope calculators", criterion_slope_calculators},
        {"criterion 8: solver soundness on the synthetic system", criterion_solver_soundness},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out.fail(std::string("exception: ") + ex.what());
        }
        std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << e.name;
        if (!out.notes.empty() && out.pass) std::cout << " — " << out.notes.front();
        std::cout << "\n";
        if (!out.pass) {
            for (const std::string& n : out.notes) std::cout << "       " << n << "\n";
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures;
}
