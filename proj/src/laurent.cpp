#include "dacurve/laurent.hpp"

#include <sstream>

namespace dacurve {

LaurentPoly LaurentPoly::term(long long exponent, const Rat& coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = coeff;
    return p;
}

long long LaurentPoly::min_exponent() const {
    require(!terms_.empty(), "min_exponent: zero polynomial");
    return terms_.begin()->first;
}

long long LaurentPoly::max_exponent() const {
    require(!terms_.empty(), "max_exponent: zero polynomial");
    return terms_.rbegin()->first;
}

Rat LaurentPoly::coeff(long long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) {
        Rat v = out.coeff(e) + c;
        if (v == 0)
            out.terms_.erase(e);
        else
            out.terms_[e] = v;
    }
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    return *this + rhs * Rat(-1);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) {
            long long e = e1 + e2;
            Rat v = out.coeff(e) + c1 * c2;
            if (v == 0)
                out.terms_.erase(e);
            else
                out.terms_[e] = v;
        }
    return out;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (e != 0) os << "*" << var << "^" << e;
    }
    return os.str();
}

}  // namespace dacurve
