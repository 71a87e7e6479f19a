#include "dacurve/certify.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "dacurve/chi.hpp"
#include "dacurve/lp.hpp"
#include "dacurve/rnc.hpp"

namespace dacurve::stab {

using sections::PluriLabel;

ClassSystem ClassSystem::build(int k, int m) {
    require(k >= 2, "ClassSystem: k >= 2 required");
    require(m >= 2, "ClassSystem: m >= 2 required");
    std::map<PluriLabel, std::vector<Monomial>> buckets;
    for (Monomial& mon : enumerate_monomials(k, m, Purity::All)) {
        PluriLabel label{};
        if (mon.pure_x())
            label = {PluriLabel::Kind::Omega, mon.omega_index()};
        else if (mon.pure_y())
            label = {PluriLabel::Kind::Eta, mon.eta_index()};
        else
            label = {PluriLabel::Kind::Chi, mon.weighted_degree()};
        buckets[label].push_back(std::move(mon));
    }
    ClassSystem sys;
    sys.k = k;
    sys.m = m;
    auto emit = [&](PluriLabel::Kind kind, long long lo, long long hi) {
        for (long long i = lo; i <= hi; ++i) {
            auto it = buckets.find(PluriLabel{kind, i});
            ensure(it != buckets.end(), "ClassSystem: empty class");
            std::sort(it->second.begin(), it->second.end());
            sys.classes.push_back({PluriLabel{kind, i}, std::move(it->second)});
        }
    };
    const long long pure_top = static_cast<long long>(m) * (k - 1);
    const long long chi_top = static_cast<long long>(k) * (m - 1) - 1;
    emit(PluriLabel::Kind::Omega, 0, pure_top);
    emit(PluriLabel::Kind::Eta, 0, pure_top);
    emit(PluriLabel::Kind::Chi, -chi_top, chi_top);
    ensure(sys.classes.size() == static_cast<std::size_t>((2 * m - 1) * (2 * k - 1)),
           "ClassSystem: wrong class count");
    return sys;
}

Rat ClassSystem::barycenter_target() const {
    return make_rat(Int(m) * static_cast<long>(num_classes()), Int(2) * k);
}

BasisSelector::BasisSelector(const ClassSystem& sys)
    : sys_(&sys), selector_(2 * static_cast<std::size_t>(sys.k)) {
    for (const auto& cls : sys.classes) {
        std::vector<std::vector<int>> rows;
        rows.reserve(cls.members.size());
        for (const Monomial& mon : cls.members) {
            std::vector<int> row = mon.a();
            row.insert(row.end(), mon.b().begin(), mon.b().end());
            rows.push_back(std::move(row));
        }
        selector_.add_group(rows);
    }
}

GroupedSelector::Selection BasisSelector::raw_select(const std::vector<Int>& w) const {
    return selector_.select(w);
}

MinBasisResult BasisSelector::min_basis(const RhoWeights& r) const {
    require(r.k == sys_->k, "min_basis: weight dimension mismatch");
    require(r.trace_zero(), "min_basis: trace-zero weights required");
    GroupedSelector::Selection sel = selector_.select(r.flat());
    MinBasisResult out;
    out.weight = std::move(sel.weight);
    out.basis.reserve(sys_->classes.size());
    for (std::size_t g = 0; g < sys_->classes.size(); ++g)
        out.basis.push_back(sys_->classes[g].members[sel.picks[g]]);
    return out;
}

MinBasisResult min_weight_basis(const ClassSystem& sys, const RhoWeights& r) {
    return BasisSelector(sys).min_basis(r);
}

namespace {

// Clear a rational vector to coprime integers (positive scaling).
std::vector<Int> integerize(const std::vector<Rat>& v) {
    Int lcm = 1;
    for (const Rat& q : v) {
        Int den = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<Int> out;
    out.reserve(v.size());
    Int gcd = 0;
    for (const Rat& q : v) {
        Int value = q.get_num() * (lcm / q.get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), value.get_mpz_t());
        out.push_back(std::move(value));
    }
    if (gcd > 1)
        for (Int& z : out) z /= gcd;
    return out;
}

struct CutPool {
    // selection-sum vectors (dimension 2k) with the selections behind them
    std::vector<std::vector<Int>> sums;
    std::vector<std::vector<std::size_t>> picks;
    std::map<std::vector<Int>, std::size_t> index;

    bool add(std::vector<Int> sum, std::vector<std::size_t> pick) {
        auto [it, inserted] = index.try_emplace(sum, sums.size());
        if (!inserted) return false;
        sums.push_back(std::move(sum));
        picks.push_back(std::move(pick));
        return true;
    }
};

std::vector<Int> selection_sum(const ClassSystem& sys,
                               const std::vector<std::size_t>& picks) {
    std::vector<Int> sum(2 * static_cast<std::size_t>(sys.k), Int(0));
    for (std::size_t g = 0; g < sys.classes.size(); ++g) {
        const Monomial& mon = sys.classes[g].members[picks[g]];
        for (int i = 0; i < sys.k; ++i) {
            sum[static_cast<std::size_t>(i)] += mon.a()[static_cast<std::size_t>(i)];
            sum[static_cast<std::size_t>(sys.k + i)] += mon.b()[static_cast<std::size_t>(i)];
        }
    }
    return sum;
}

}  // namespace

StabilityCertificate certify(const ClassSystem& sys) {
    const int dim = 2 * sys.k;
    BasisSelector selector(sys);
    const Rat t = sys.barycenter_target();

    CutPool pool;
    auto add_cut_at = [&](const std::vector<Int>& w) {
        GroupedSelector::Selection sel = selector.raw_select(w);
        std::vector<Int> sum = selection_sum(sys, sel.picks);
        pool.add(std::move(sum), std::move(sel.picks));
    };
    // Seed the outer approximation with cheap directions: the zero vector
    // and every difference of coordinate directions (trace-zero).
    add_cut_at(std::vector<Int>(static_cast<std::size_t>(dim), Int(0)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            std::vector<Int> w(static_cast<std::size_t>(dim), Int(0));
            w[static_cast<std::size_t>(i)] = 1;
            w[static_cast<std::size_t>(j)] = -1;
            add_cut_at(w);
        }

    for (long long round = 0;; ++round) {
        ensure(round < 1'000'000, "certify: cut budget exhausted");
        lp::MaxMinResult master = lp::max_min_trace_zero(pool.sums);
        ensure(master.value >= 0, "certify: master value below zero is impossible");

        if (master.value == 0) {
            // Feasible side: express the constant-barycenter point as a
            // convex combination of the generated basis sums.
            lp::Problem theta;
            theta.num_vars = pool.sums.size();
            theta.rows.reserve(static_cast<std::size_t>(dim) + 1);
            {
                lp::Row ones;
                ones.a.assign(theta.num_vars, Rat(1));
                ones.rel = lp::Rel::Eq;
                ones.b = 1;
                theta.rows.push_back(std::move(ones));
            }
            for (int i = 0; i < dim; ++i) {
                lp::Row row;
                row.a.reserve(theta.num_vars);
                for (const auto& w : pool.sums) row.a.push_back(Rat(w[static_cast<std::size_t>(i)]));
                row.rel = lp::Rel::Eq;
                row.b = t;
                theta.rows.push_back(std::move(row));
            }
            lp::Result res = lp::solve(theta);
            ensure(res.status == lp::Status::Optimal,
                   "certify: witness combination must exist once the max-min value is zero");

            StabilityCertificate cert;
            cert.verdict = StabilityCertificate::Verdict::Semistable;
            cert.k = sys.k;
            cert.m = sys.m;
            cert.t = t;
            cert.witness.resize(sys.classes.size());
            for (std::size_t c = 0; c < sys.classes.size(); ++c)
                cert.witness[c].assign(sys.classes[c].members.size(), Rat(0));
            for (std::size_t b = 0; b < pool.sums.size(); ++b) {
                if (res.x[b] == 0) continue;
                for (std::size_t c = 0; c < sys.classes.size(); ++c)
                    cert.witness[c][pool.picks[b][c]] += res.x[b];
            }
            std::string reason;
            ensure(verify_certificate(cert, sys, &reason),
                   "certify: witness failed verification: " + reason);
            return cert;
        }

        // Positive side: test the maximizing direction against the true
        // minimum; either it separates or its minimal basis is a new cut.
        std::vector<Int> rho_int = integerize(master.rho);
        GroupedSelector::Selection sel = selector.raw_select(rho_int);
        if (sel.weight > 0) {
            StabilityCertificate cert;
            cert.verdict = StabilityCertificate::Verdict::NonSemistable;
            cert.k = sys.k;
            cert.m = sys.m;
            cert.t = t;
            cert.destabilizer = RhoWeights::from_flat(sys.k, rho_int);
            cert.destabilizer_weight = sel.weight;
            std::string reason;
            ensure(verify_certificate(cert, sys, &reason),
                   "certify: destabilizer failed verification: " + reason);
            return cert;
        }
        std::vector<Int> sum = selection_sum(sys, sel.picks);
        bool added = pool.add(std::move(sum), std::move(sel.picks));
        ensure(added, "certify: cutting plane repeated; no progress possible");
    }
}

bool verify_certificate(const StabilityCertificate& cert, const ClassSystem& sys,
                        std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (cert.k != sys.k || cert.m != sys.m) return fail("k/m mismatch");
    const Rat t = sys.barycenter_target();
    if (cert.t != t) return fail("target t mismatch");

    if (cert.verdict == StabilityCertificate::Verdict::Semistable) {
        if (cert.witness.size() != sys.classes.size()) return fail("witness class count");
        std::vector<Rat> sum(2 * static_cast<std::size_t>(sys.k), Rat(0));
        for (std::size_t c = 0; c < sys.classes.size(); ++c) {
            const auto& members = sys.classes[c].members;
            if (cert.witness[c].size() != members.size()) return fail("witness member count");
            Rat total(0);
            for (std::size_t j = 0; j < members.size(); ++j) {
                const Rat& u = cert.witness[c][j];
                if (u < 0) return fail("negative coefficient");
                if (u == 0) continue;
                total += u;
                for (int i = 0; i < sys.k; ++i) {
                    sum[static_cast<std::size_t>(i)] +=
                        u * members[j].a()[static_cast<std::size_t>(i)];
                    sum[static_cast<std::size_t>(sys.k + i)] +=
                        u * members[j].b()[static_cast<std::size_t>(i)];
                }
            }
            if (total != 1) return fail("class coefficients do not sum to 1");
        }
        for (const Rat& v : sum)
            if (v != t) return fail("barycenter equation violated");
        return true;
    }

    if (!cert.destabilizer) return fail("missing destabilizer");
    if (!cert.destabilizer->trace_zero()) return fail("destabilizer not trace-zero");
    MinBasisResult recomputed = min_weight_basis(sys, *cert.destabilizer);
    if (recomputed.weight != cert.destabilizer_weight)
        return fail("stated min weight disagrees with recomputation");
    if (recomputed.weight <= 0) return fail("destabilizer weight not positive");
    return true;
}

ConstructiveEngine::ConstructiveEngine(int k, int m)
    : k_(k), m_(m), rnc_(rnc::rnc_classes(k, m)), chi_(k, m) {
    require(k >= 2 && m >= 2, "ConstructiveEngine: bad parameters");
}

MinBasisResult ConstructiveEngine::build(const RhoWeights& r, std::string* dispatch) const {
    require(r.k == k_, "constructive_basis: weight dimension mismatch");
    require(r.trace_zero(), "constructive_basis: trace-zero weights required");

    rnc::RncSelection omega = rnc_.select(r.lambda);
    rnc::RncSelection eta = rnc_.select(r.nu);
    chi::ChiBasis chi_part = chi_.basis(r, dispatch);

    MinBasisResult out;
    out.weight = omega.weight + eta.weight + chi_part.weight(r);
    out.basis = std::move(omega.basis);
    for (const Monomial& mon : eta.basis) out.basis.push_back(mon.involution());
    for (const Monomial& mon : chi_part.mons) out.basis.push_back(mon);
    ensure(out.weight <= 0,
           "constructive_basis: assembled basis has positive weight; this contradicts "
           "the semistability theorem for the balanced double A-curve");
    return out;
}

Int ConstructiveEngine::weight(const RhoWeights& r) const {
    require(r.k == k_, "constructive_basis: weight dimension mismatch");
    require(r.trace_zero(), "constructive_basis: trace-zero weights required");
    Int total = rnc_.weight(r.lambda) + rnc_.weight(r.nu) + chi_.weight(r);
    ensure(total <= 0,
           "constructive_basis: assembled basis has positive weight; this contradicts "
           "the semistability theorem for the balanced double A-curve");
    return total;
}

MinBasisResult constructive_basis(int k, int m, const RhoWeights& r) {
    require(k >= 2 && m >= 2, "constructive_basis: bad parameters");
    return ConstructiveEngine(k, m).build(r);
}

RhoWeights random_trace_zero(int k, SplitMix64& gen, long long bound) {
    std::vector<Int> lambda, nu;
    Int sum = 0;
    for (int i = 0; i < k; ++i) {
        lambda.emplace_back(static_cast<long>(gen.uniform(-bound, bound)));
        sum += lambda.back();
    }
    for (int i = 0; i < k - 1; ++i) {
        nu.emplace_back(static_cast<long>(gen.uniform(-bound, bound)));
        sum += nu.back();
    }
    nu.emplace_back(-sum);
    return RhoWeights(k, std::move(lambda), std::move(nu));
}

FuzzReport fuzz(const ClassSystem& sys, int trials, std::uint64_t seed, int jobs,
                const std::optional<RhoWeights>& inject, long long entry_bound) {
    require(trials >= 1, "fuzz: trials >= 1 required");
    require(jobs >= 1, "fuzz: jobs >= 1 required");
    BasisSelector selector(sys);
    const long long bound = entry_bound > 0 ? entry_bound : 10LL * sys.k * sys.m;

    auto rho_for_trial = [&](int trial) -> RhoWeights {
        if (trial == 0 && inject) return *inject;
        SplitMix64 gen = SplitMix64::stream(seed, static_cast<std::uint64_t>(trial));
        return random_trace_zero(sys.k, gen, bound);
    };

    struct Best {
        bool set = false;
        Int weight;
        int trial = -1;
    };
    auto better = [](const Best& a, const Best& b) {  // prefer b?
        if (!a.set) return true;
        if (!b.set) return false;
        if (b.weight != a.weight) return b.weight > a.weight;
        return b.trial < a.trial;
    };

    std::vector<Best> results(static_cast<std::size_t>(jobs));
    auto worker = [&](int w) {
        Best local;
        for (int trial = w; trial < trials; trial += jobs) {
            RhoWeights r = rho_for_trial(trial);
            Int weight = selector.min_basis(r).weight;
            Best cand{true, weight, trial};
            if (better(local, cand)) local = cand;
        }
        results[static_cast<std::size_t>(w)] = local;
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& th : threads) th.join();
    }
    Best best;
    for (const Best& b : results)
        if (b.set && better(best, b)) best = b;

    FuzzReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.bound = bound;
    rep.max_weight = best.weight;
    rep.argmax_trial = best.trial;
    rep.argmax_rho = rho_for_trial(best.trial);
    rep.all_nonpositive = best.weight <= 0;
    return rep;
}

Rat exhaustive_max_min(const ClassSystem& sys, std::size_t limit) {
    std::size_t count = 1;
    for (const auto& cls : sys.classes) {
        count *= cls.members.size();
        require(count <= limit, "exhaustive_max_min: too many bases");
    }
    std::map<std::vector<Int>, bool> sums;
    std::vector<std::size_t> pick(sys.classes.size(), 0);
    while (true) {
        sums.try_emplace(selection_sum(sys, pick), true);
        std::size_t g = 0;
        while (g < pick.size()) {
            if (++pick[g] < sys.classes[g].members.size()) break;
            pick[g] = 0;
            ++g;
        }
        if (g == pick.size()) break;
    }
    std::vector<std::vector<Int>> vectors;
    vectors.reserve(sums.size());
    for (auto& [w, unused] : sums) vectors.push_back(w);
    return lp::max_min_trace_zero(vectors).value;
}

}  // namespace dacurve::stab
