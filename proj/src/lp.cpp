#include "dacurve/lp.hpp"

#include <algorithm>

namespace dacurve::lp {

namespace {

// Dense simplex tableau in exact rationals. Row layout: one row per
// constraint plus the reduced-cost row; column layout: structural columns,
// slack columns, artificial columns, rhs.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), t_(rows * cols) {}

    Rat& at(std::size_t r, std::size_t c) { return t_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return t_[r * cols_ + c]; }

    void pivot(std::size_t pr, std::size_t pc) {
        Rat inv = at(pr, pc);
        for (std::size_t c = 0; c < cols_; ++c) at(pr, c) /= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            Rat factor = at(r, pc);
            if (factor == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c) at(r, c) -= factor * at(pr, c);
        }
    }

    std::size_t rows_, cols_;
    std::vector<Rat> t_;
};

struct Standard {
    // standard form: min c.x, A x = b, x >= 0, b >= 0
    std::size_t n = 0;  // structural + slack columns
    std::vector<Rat> c;
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    // original variable -> (plus column, minus column or SIZE_MAX)
    std::vector<std::pair<std::size_t, std::size_t>> var_cols;
};

Standard to_standard(const Problem& p) {
    require(p.objective.empty() || p.objective.size() == p.num_vars,
            "lp::solve: objective size mismatch");
    require(p.free_vars.empty() || p.free_vars.size() == p.num_vars,
            "lp::solve: free_vars size mismatch");
    Standard s;
    auto is_free = [&](std::size_t v) {
        return !p.free_vars.empty() && p.free_vars[v];
    };
    for (std::size_t v = 0; v < p.num_vars; ++v) {
        std::size_t plus = s.n++;
        std::size_t minus = is_free(v) ? s.n++ : SIZE_MAX;
        s.var_cols.push_back({plus, minus});
    }
    std::size_t slack_base = s.n;
    std::size_t num_slacks = 0;
    for (const Row& row : p.rows)
        if (row.rel != Rel::Eq) ++num_slacks;
    s.n += num_slacks;

    s.c.assign(s.n, Rat(0));
    for (std::size_t v = 0; v < p.num_vars; ++v) {
        Rat cv = p.objective.empty() ? Rat(0) : p.objective[v];
        if (p.maximize) cv = -cv;
        s.c[s.var_cols[v].first] = cv;
        if (s.var_cols[v].second != SIZE_MAX) s.c[s.var_cols[v].second] = -cv;
    }

    std::size_t slack = slack_base;
    for (const Row& row : p.rows) {
        require(row.a.size() == p.num_vars, "lp::solve: row size mismatch");
        std::vector<Rat> arow(s.n, Rat(0));
        for (std::size_t v = 0; v < p.num_vars; ++v) {
            arow[s.var_cols[v].first] = row.a[v];
            if (s.var_cols[v].second != SIZE_MAX) arow[s.var_cols[v].second] = -row.a[v];
        }
        if (row.rel == Rel::Le)
            arow[slack++] = 1;
        else if (row.rel == Rel::Ge)
            arow[slack++] = -1;
        Rat rhs = row.b;
        if (rhs < 0) {
            for (Rat& q : arow) q = -q;
            rhs = -rhs;
        }
        s.a.push_back(std::move(arow));
        s.b.push_back(rhs);
    }
    return s;
}

// Bland's rule on the tableau: entering column = lowest eligible index,
// leaving row = lowest basic index among the minimal ratios.
Status run_simplex(Tableau& t, std::vector<std::size_t>& basis, std::size_t num_cols) {
    const std::size_t m = t.rows_ - 1;
    const std::size_t rhs = t.cols_ - 1;
    for (long long iter = 0;; ++iter) {
        ensure(iter < 20'000'000, "lp: pivot budget exhausted");
        std::size_t enter = SIZE_MAX;
        for (std::size_t c = 0; c < num_cols; ++c) {
            if (t.at(m, c) < 0) {
                enter = c;
                break;
            }
        }
        if (enter == SIZE_MAX) return Status::Optimal;
        std::size_t leave = SIZE_MAX;
        Rat best_ratio;
        for (std::size_t r = 0; r < m; ++r) {
            if (t.at(r, enter) <= 0) continue;
            Rat ratio = t.at(r, rhs) / t.at(r, enter);
            if (leave == SIZE_MAX || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == SIZE_MAX) return Status::Unbounded;
        t.pivot(leave, enter);
        basis[leave] = enter;
    }
}

}  // namespace

Result solve(const Problem& p) {
    Standard s = to_standard(p);
    const std::size_t m = s.a.size();
    const std::size_t n = s.n;
    const std::size_t total = n + m;  // + artificials
    Tableau t(m + 1, total + 1);
    std::vector<std::size_t> basis(m);

    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) t.at(r, c) = s.a[r][c];
        t.at(r, n + r) = 1;
        t.at(r, total) = s.b[r];
        basis[r] = n + r;
    }
    // phase-1 reduced costs: artificials cost 1, so subtract each row
    for (std::size_t c = 0; c <= total; ++c) {
        Rat sum(0);
        for (std::size_t r = 0; r < m; ++r) sum += t.at(r, c);
        t.at(m, c) = (c >= n && c < total) ? Rat(0) : -sum;
    }

    Status st = run_simplex(t, basis, total);
    ensure(st == Status::Optimal, "lp: phase 1 cannot be unbounded");
    if (t.at(m, total) != 0) return Result{Status::Infeasible, Rat(0), {}};

    // Drive zero-level artificials out of the basis; rows that admit no
    // pivot are redundant and are cleared.
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n) continue;
        std::size_t c = 0;
        while (c < n && t.at(r, c) == 0) ++c;
        if (c < n) {
            t.pivot(r, c);
            basis[r] = c;
        }
    }

    // phase 2: true costs, reduced against the current basis
    for (std::size_t c = 0; c <= total; ++c) t.at(m, c) = 0;
    for (std::size_t c = 0; c < n; ++c) t.at(m, c) = s.c[c];
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] >= n) continue;  // redundant row, stays out of the way
        Rat cb = s.c[basis[r]];
        if (cb == 0) continue;
        for (std::size_t c = 0; c <= total; ++c) t.at(m, c) -= cb * t.at(r, c);
    }
    // artificial columns are no longer eligible
    st = run_simplex(t, basis, n);
    if (st == Status::Unbounded) return Result{Status::Unbounded, Rat(0), {}};

    std::vector<Rat> xstd(n, Rat(0));
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] < n) xstd[basis[r]] = t.at(r, total);

    Result out;
    out.status = Status::Optimal;
    out.x.assign(p.num_vars, Rat(0));
    for (std::size_t v = 0; v < p.num_vars; ++v) {
        out.x[v] = xstd[s.var_cols[v].first];
        if (s.var_cols[v].second != SIZE_MAX) out.x[v] -= xstd[s.var_cols[v].second];
    }
    out.objective = 0;
    if (!p.objective.empty())
        for (std::size_t v = 0; v < p.num_vars; ++v) out.objective += p.objective[v] * out.x[v];
    return out;
}

MaxMinResult max_min_trace_zero(const std::vector<std::vector<Int>>& vectors) {
    require(!vectors.empty(), "max_min_trace_zero: need at least one vector");
    const std::size_t d = vectors.front().size();
    for (const auto& w : vectors)
        require(w.size() == d, "max_min_trace_zero: inconsistent dimensions");

    // variables: z (free), p_1..p_d, n_1..n_d with rho = p - n
    Problem prob;
    prob.num_vars = 1 + 2 * d;
    prob.maximize = true;
    prob.objective.assign(prob.num_vars, Rat(0));
    prob.objective[0] = 1;
    prob.free_vars.assign(prob.num_vars, false);
    prob.free_vars[0] = true;

    for (const auto& w : vectors) {
        Row row;
        row.a.assign(prob.num_vars, Rat(0));
        row.a[0] = 1;
        for (std::size_t i = 0; i < d; ++i) {
            row.a[1 + i] = Rat(-w[i]);
            row.a[1 + d + i] = Rat(w[i]);
        }
        row.rel = Rel::Le;
        row.b = 0;
        prob.rows.push_back(std::move(row));
    }
    {
        Row norm;
        norm.a.assign(prob.num_vars, Rat(1));
        norm.a[0] = 0;
        norm.rel = Rel::Le;
        norm.b = 1;
        prob.rows.push_back(std::move(norm));
    }
    {
        Row trace;
        trace.a.assign(prob.num_vars, Rat(0));
        for (std::size_t i = 0; i < d; ++i) {
            trace.a[1 + i] = 1;
            trace.a[1 + d + i] = -1;
        }
        trace.rel = Rel::Eq;
        trace.b = 0;
        prob.rows.push_back(std::move(trace));
    }

    Result res = solve(prob);
    ensure(res.status == Status::Optimal, "max_min_trace_zero: LP must be solvable");
    MaxMinResult out;
    out.value = res.objective;
    out.rho.resize(d);
    for (std::size_t i = 0; i < d; ++i) out.rho[i] = res.x[1 + i] - res.x[1 + d + i];
    return out;
}

}  // namespace dacurve::lp
