#include "dacurve/selection.hpp"

#include <limits>

namespace dacurve {

void GroupedSelector::add_group(const std::vector<std::vector<int>>& rows) {
    require(!rows.empty(), "GroupedSelector: empty group");
    Group g;
    g.n = rows.size();
    g.flat.reserve(rows.size() * dim_);
    for (const auto& row : rows) {
        require(row.size() == dim_, "GroupedSelector: row dimension mismatch");
        long long deg = 0;
        for (int e : row) {
            require(e >= 0, "GroupedSelector: negative exponent");
            deg += e;
            g.flat.push_back(e);
        }
        if (deg > max_degree_) max_degree_ = deg;
    }
    groups_.push_back(std::move(g));
}

bool GroupedSelector::select_i64(const std::vector<long long>& w, Selection& out) const {
    out.picks.assign(groups_.size(), 0);
    long long total = 0;
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        const Group& g = groups_[gi];
        long long best = 0;
        std::size_t best_idx = 0;
        for (std::size_t r = 0; r < g.n; ++r) {
            const int* row = g.flat.data() + r * dim_;
            long long v = 0;
            for (std::size_t i = 0; i < dim_; ++i) v += row[i] * w[i];
            if (r == 0 || v < best) {
                best = v;
                best_idx = r;
            }
        }
        out.picks[gi] = best_idx;
        total += best;
    }
    out.weight = Int(static_cast<long>(total));
    // long long -> long is lossless on LP64
    static_assert(sizeof(long) == sizeof(long long));
    return true;
}

GroupedSelector::Selection GroupedSelector::select_exact(const std::vector<Int>& w) const {
    Selection out;
    out.picks.assign(groups_.size(), 0);
    out.weight = 0;
    Int v, best;
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        const Group& g = groups_[gi];
        std::size_t best_idx = 0;
        for (std::size_t r = 0; r < g.n; ++r) {
            const int* row = g.flat.data() + r * dim_;
            v = 0;
            for (std::size_t i = 0; i < dim_; ++i) {
                int e = row[i];
                if (e > 0) mpz_addmul_ui(v.get_mpz_t(), w[i].get_mpz_t(),
                                         static_cast<unsigned long>(e));
            }
            if (r == 0 || v < best) {
                best = v;
                best_idx = r;
            }
        }
        out.picks[gi] = best_idx;
        out.weight += best;
    }
    return out;
}

GroupedSelector::Selection GroupedSelector::select(const std::vector<Int>& w) const {
    require(w.size() == dim_, "GroupedSelector: weight dimension mismatch");
    // Guard for the machine-integer path: |per-row weight| <= max_degree * W
    // and the total adds at most num_groups of those, so demand
    // W * (max_degree+1) * (num_groups+1) < 2^62.
    const long long kSafe = (1LL << 62);
    long long limit = kSafe / (max_degree_ + 1) / (static_cast<long long>(groups_.size()) + 1);
    bool fits = limit > 0;
    std::vector<long long> wi(w.size());
    for (std::size_t i = 0; i < w.size() && fits; ++i) {
        if (!w[i].fits_slong_p()) {
            fits = false;
            break;
        }
        long long v = w[i].get_si();
        if (v > limit || v < -limit) fits = false;
        wi[i] = v;
    }
    Selection out;
    if (fits && select_i64(wi, out)) return out;
    return select_exact(w);
}

}  // namespace dacurve
