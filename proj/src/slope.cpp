#include "dacurve/slope.hpp"

namespace dacurve::slope {

Int hypersurface_count(int g, int m) {
    require(g >= 3, "hypersurface_count: g >= 3 required");
    require(m >= 1, "hypersurface_count: m >= 1 required");
    return binomial(static_cast<unsigned long>(g - 2 + m), static_cast<unsigned long>(m)) -
           Int(m) * (g - 1);
}

Int bielliptic_weight_bound(int g, int m) {
    require(g >= 3, "bielliptic_weight_bound: g >= 3 required");
    require(m >= 2, "bielliptic_weight_bound: m >= 2 required");
    Int gz(g), mz(m);
    Int bound = (gz - 1) * ((gz + 1) * mz - 2 * mz * mz - gz);
    // the two displayed forms agree identically
    Int alt = (mz - 1) * (gz - 1) * (gz - mz) - mz * (mz * (gz - 1));
    ensure(bound == alt, "bielliptic_weight_bound: algebraic forms disagree");
    return bound;
}

std::string verdict_str(BiellipticVerdict v) {
    return v == BiellipticVerdict::NonSemistable ? "NONSEMISTABLE"
                                                 : "UNDETERMINED-BY-THIS-BOUND";
}

BiellipticRow bielliptic_classify(int g, int m) {
    require(g >= 3, "bielliptic_classify: g >= 3 required");
    require(m >= 2, "bielliptic_classify: m >= 2 required");
    BiellipticRow row;
    row.g = g;
    row.m = m;
    row.s_m = hypersurface_count(g, m);
    row.weight_bound = bielliptic_weight_bound(g, m);
    row.verdict = row.weight_bound > 0 ? BiellipticVerdict::NonSemistable
                                       : BiellipticVerdict::UndeterminedByThisBound;
    row.destabilizer.assign(static_cast<std::size_t>(g - 1), Int(-1));
    row.destabilizer.push_back(Int(g - 1));
    if (row.verdict == BiellipticVerdict::UndeterminedByThisBound && g % 2 == 1) {
        int threshold = (g - 1) / 2;
        row.annotation = "generic bielliptic curves of odd genus are semistable for m >= " +
                         std::to_string(threshold) +
                         (m >= threshold ? " (m in range; not certified here)" : "");
    }
    return row;
}

PolarizationSlope polarization_slope(int g, int m) {
    require(g >= 2, "polarization_slope: g >= 2 required");
    require(m >= 2, "polarization_slope: m >= 2 required");
    PolarizationSlope out;
    out.g = g;
    out.m = m;
    Int gz(g), mz(m);
    out.unnormalized_lambda = mz * (mz - 1) * (4 * gz + 2) - (mz - 1) * (gz - 1) + 1;
    out.unnormalized_delta = gz * mz * (mz - 1) / 2;
    // 8 + 4/g - 2(g-1)/(gm) + 2/(gm(m-1))
    out.normalized = Rat(8) + make_rat(4, gz) - make_rat(2 * (gz - 1), gz * mz) +
                     make_rat(2, gz * mz * (mz - 1));
    ensure(out.normalized == make_rat(out.unnormalized_lambda, out.unnormalized_delta),
           "polarization_slope: normalized value disagrees with the coefficient pair");
    return out;
}

TrigonalComparison trigonal_comparison(int g) {
    require(g >= 3, "trigonal_comparison: g >= 3 required");
    TrigonalComparison out;
    out.g = g;
    Int gz(g);
    out.trigonal_max = make_rat(36 * (gz + 1), 5 * gz + 1);
    out.slope_m3 = make_rat(22, 3) + make_rat(5, gz);
    ensure(out.slope_m3 == polarization_slope(g, 3).normalized,
           "trigonal_comparison: m=3 slope mismatch");
    out.trigonal_at_most_slope = out.trigonal_max <= out.slope_m3;
    out.discriminant = (gz - 3) * (2 * gz - 5);
    out.boundary = out.discriminant == 0;
    ensure(out.trigonal_at_most_slope == (out.discriminant >= 0),
           "trigonal_comparison: comparison disagrees with its discriminant form");
    return out;
}

}  // namespace dacurve::slope
