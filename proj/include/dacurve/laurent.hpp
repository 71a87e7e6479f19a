#pragma once

#include <map>
#include <string>

#include "dacurve/common.hpp"

namespace dacurve {

// Univariate Laurent polynomial with exact rational coefficients and finite
// support. The variable name is supplied at print time.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly term(long long exponent, const Rat& coeff);
    static LaurentPoly constant(const Rat& c) { return term(0, c); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    long long min_exponent() const;
    long long max_exponent() const;
    Rat coeff(long long exponent) const;
    const std::map<long long, Rat>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const Rat& c) const;
    bool operator==(const LaurentPoly& rhs) const = default;

    std::string str(const std::string& var) const;  // "c*s^e" sums

private:
    std::map<long long, Rat> terms_;  // exponent -> nonzero coefficient
};

}  // namespace dacurve
