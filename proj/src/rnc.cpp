#include "dacurve/rnc.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dacurve::rnc {

RncClassSystem rnc_classes(int k, int m) {
    require(k >= 2, "rnc_classes: k >= 2 required");
    require(m >= 1, "rnc_classes: m >= 1 required");
    RncClassSystem sys;
    sys.k = k;
    sys.m = m;
    sys.classes.resize(static_cast<std::size_t>(m) * (k - 1) + 1);
    for (Monomial& mon : enumerate_monomials(k, m, Purity::PureX)) {
        long long j = mon.omega_index();
        ensure(0 <= j && j < static_cast<long long>(sys.classes.size()),
               "rnc_classes: index out of range");
        sys.classes[static_cast<std::size_t>(j)].push_back(std::move(mon));
    }
    for (auto& cls : sys.classes) {
        ensure(!cls.empty(), "rnc_classes: empty class");
        std::sort(cls.begin(), cls.end());
    }
    return sys;
}

namespace {

GroupedSelector build_selector(const RncClassSystem& sys) {
    GroupedSelector sel(static_cast<std::size_t>(sys.k));
    for (const auto& cls : sys.classes) {
        std::vector<std::vector<int>> rows;
        rows.reserve(cls.size());
        for (const Monomial& mon : cls) rows.push_back(mon.a());
        sel.add_group(rows);
    }
    return sel;
}

}  // namespace

RncSelector::RncSelector(RncClassSystem sys)
    : sys_(std::move(sys)), selector_(build_selector(sys_)) {}

RncSelection RncSelector::select(const std::vector<Int>& lambda) const {
    require(lambda.size() == static_cast<std::size_t>(sys_.k),
            "RncSelector: lambda must have length k");
    GroupedSelector::Selection s = selector_.select(lambda);
    RncSelection out;
    out.weight = std::move(s.weight);
    out.basis.reserve(sys_.classes.size());
    for (std::size_t g = 0; g < sys_.classes.size(); ++g)
        out.basis.push_back(sys_.classes[g][s.picks[g]]);
    return out;
}

Int RncSelector::weight(const std::vector<Int>& lambda) const {
    require(lambda.size() == static_cast<std::size_t>(sys_.k),
            "RncSelector: lambda must have length k");
    return selector_.select(lambda).weight;
}

RncSelection min_weight_rnc_basis(const RncClassSystem& sys, const std::vector<Int>& lambda) {
    return RncSelector(sys).select(lambda);
}

KempfReport kempf_bound_check(int k, int m, const std::vector<Int>& lambda) {
    KempfReport rep;
    rep.k = k;
    rep.m = m;
    rep.lambda = lambda;
    RncClassSystem sys = rnc_classes(k, m);
    rep.min_weight = min_weight_rnc_basis(sys, lambda).weight;
    Int sum = 0;
    for (const Int& v : lambda) sum += v;
    rep.bound = make_rat(Int(m) * (Int(m) * (k - 1) + 1) * sum, Int(k));
    // exact comparison: min_weight <= bound  <=>  min_weight * k <= numerator-side
    rep.pass = make_rat(rep.min_weight, 1) <= rep.bound;
    ensure(rep.pass, "kempf_bound_check: bound violated; this contradicts the rational "
                     "normal curve semistability bound");
    return rep;
}

std::vector<std::vector<Int>> enumerate_selection_sums(const RncClassSystem& sys,
                                                       std::size_t limit) {
    std::size_t count = 1;
    for (const auto& cls : sys.classes) {
        count *= cls.size();
        require(count <= limit, "enumerate_selection_sums: too many selections");
    }
    std::set<std::vector<Int>> sums;
    std::vector<std::size_t> pick(sys.classes.size(), 0);
    while (true) {
        std::vector<Int> sum(static_cast<std::size_t>(sys.k), Int(0));
        for (std::size_t g = 0; g < sys.classes.size(); ++g) {
            const Monomial& mon = sys.classes[g][pick[g]];
            for (int i = 0; i < sys.k; ++i)
                sum[static_cast<std::size_t>(i)] += mon.a()[static_cast<std::size_t>(i)];
        }
        sums.insert(std::move(sum));
        // advance odometer
        std::size_t g = 0;
        while (g < pick.size()) {
            if (++pick[g] < sys.classes[g].size()) break;
            pick[g] = 0;
            ++g;
        }
        if (g == pick.size()) break;
    }
    return std::vector<std::vector<Int>>(sums.begin(), sums.end());
}

}  // namespace dacurve::rnc
