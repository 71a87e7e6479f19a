#pragma once

#include <cstddef>
#include <vector>

#include "dacurve/common.hpp"

namespace dacurve {

// Exact one-member-per-group minimum-weight selection. The total minimum
// decomposes into per-group minima because nothing couples the groups.
// Rows are nonnegative integer exponent vectors; the weight of a row under
// w is the dot product. Ties resolve to the earliest row of the group, so
// callers pre-sort members in canonical order.
//
// When every |w_i| is small enough that no intermediate value can leave
// int64 range the selection runs on machine integers; the guard is computed
// from the row degrees, so the fast path is exact whenever taken.
class GroupedSelector {
public:
    explicit GroupedSelector(std::size_t dim) : dim_(dim) {}

    void add_group(const std::vector<std::vector<int>>& rows);
    std::size_t num_groups() const { return groups_.size(); }
    std::size_t group_size(std::size_t g) const { return groups_[g].n; }
    std::size_t dim() const { return dim_; }

    struct Selection {
        std::vector<std::size_t> picks;  // member index per group
        Int weight;                      // sum of per-group minima
    };
    Selection select(const std::vector<Int>& w) const;

private:
    bool select_i64(const std::vector<long long>& w, Selection& out) const;
    Selection select_exact(const std::vector<Int>& w) const;

    std::size_t dim_;
    struct Group {
        std::size_t n = 0;
        std::vector<int> flat;  // n rows of dim_ entries
    };
    std::vector<Group> groups_;
    long long max_degree_ = 0;  // max row sum over all rows
};

}  // namespace dacurve
