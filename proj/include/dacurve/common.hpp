#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dacurve {

// All certificate-bearing arithmetic is exact: integers are arbitrary
// precision, rationals are canonical fractions.
using Int = mpz_class;
using Rat = mpq_class;

// Invalid caller input.
inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Internal consistency. A failure here is never swallowed: it either means a
// bug or a counterexample to one of the statements this library certifies.
inline void ensure(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error(msg);
}

inline Int binomial(unsigned long n, unsigned long r) {
    Int z;
    mpz_bin_uiui(z.get_mpz_t(), n, r);
    return z;
}

// mpq_class does not canonicalize num/den constructors on its own.
inline Rat make_rat(const Int& num, const Int& den) {
    require(den != 0, "make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace dacurve
