#pragma once

#include <string>
#include <vector>

#include "dacurve/common.hpp"

namespace dacurve::slope {

// Number of degree-m hypersurfaces through an elliptic normal curve of
// degree g-1 in P^{g-2}: C(g-2+m, m) - m(g-1).
Int hypersurface_count(int g, int m);  // g >= 3, m >= 1

// Lower bound for the weight of any monomial basis under the cone-vertex
// subgroup with weights (-1, ..., -1, g-1):
//   (g-1)((g+1)m - 2m^2 - g)  =  (m-1)(g-1)(g-m) - m*(m(g-1)).
Int bielliptic_weight_bound(int g, int m);  // g >= 3, m >= 2

enum class BiellipticVerdict { NonSemistable, UndeterminedByThisBound };

std::string verdict_str(BiellipticVerdict v);

// A positive bound certifies non-semistability (every monomial basis has
// positive weight under the cone-vertex subgroup). A non-positive bound
// decides nothing: the bound is one-sided, so the verdict stays
// UNDETERMINED-BY-THIS-BOUND, annotated with the generic odd-genus
// semistability range m >= (g-1)/2 for context.
struct BiellipticRow {
    int g = 0, m = 0;
    Int s_m;
    Int weight_bound;
    BiellipticVerdict verdict = BiellipticVerdict::UndeterminedByThisBound;
    std::vector<Int> destabilizer;  // (-1, ..., -1, g-1)
    std::string annotation;
};
BiellipticRow bielliptic_classify(int g, int m);

// Coefficient of lambda in the normalized polarization of the degree-m
// Hilbert quotient: 8 + 4/g - 2(g-1)/(gm) + 2/(gm(m-1)), together with the
// unnormalized pair it is the ratio of.
struct PolarizationSlope {
    int g = 0, m = 0;
    Rat normalized;
    Int unnormalized_lambda;  // m(m-1)(4g+2) - (m-1)(g-1) + 1
    Int unnormalized_delta;   // g m (m-1) / 2
};
PolarizationSlope polarization_slope(int g, int m);  // g >= 2, m >= 2

// Maximal trigonal family slope 36(g+1)/(5g+1) against the m=3 polarization
// slope 22/3 + 5/g; the comparison is equivalent to (g-3)(2g-5) >= 0.
struct TrigonalComparison {
    int g = 0;
    Rat trigonal_max;        // 36(g+1)/(5g+1)
    Rat slope_m3;            // 22/3 + 5/g
    bool trigonal_at_most_slope = false;
    bool boundary = false;   // equality case (g = 3)
    Int discriminant;        // (g-3)(2g-5)
};
TrigonalComparison trigonal_comparison(int g);  // g >= 3

}  // namespace dacurve::slope
