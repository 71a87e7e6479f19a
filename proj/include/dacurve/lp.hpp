#pragma once

#include <vector>

#include "dacurve/common.hpp"

namespace dacurve::lp {

enum class Rel { Le, Eq, Ge };
enum class Status { Optimal, Infeasible, Unbounded };

struct Row {
    std::vector<Rat> a;
    Rel rel = Rel::Eq;
    Rat b;
};

// A linear program over exact rationals. Variables are nonnegative unless
// flagged free. An empty objective means a pure feasibility problem.
struct Problem {
    std::size_t num_vars = 0;
    bool maximize = false;
    std::vector<Rat> objective;
    std::vector<Row> rows;
    std::vector<bool> free_vars;  // empty = all nonnegative
};

struct Result {
    Status status = Status::Infeasible;
    Rat objective;
    std::vector<Rat> x;
};

// Two-phase dense simplex with Bland's rule, every pivot in exact rational
// arithmetic. Bland's rule makes cycling impossible, so termination needs
// no perturbation or tolerance.
Result solve(const Problem& p);

struct MaxMinResult {
    Rat value;
    std::vector<Rat> rho;
};

// max over the section of the cross-polytope {sum rho_i = 0, sum|rho_i| <= 1}
// of min_w <rho, w>. The min of linear forms is concave and positively
// homogeneous, so the value is 0 exactly when <rho, w> <= 0 has no trace-zero
// solution with all w on one side; a positive value comes with the maximizing
// rho as a separating certificate.
MaxMinResult max_min_trace_zero(const std::vector<std::vector<Int>>& vectors);

}  // namespace dacurve::lp
