#include "dacurve/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace dacurve {

Monomial::Monomial(int k, std::vector<int> a, std::vector<int> b)
    : k_(k), a_(std::move(a)), b_(std::move(b)) {
    require(k_ >= 1, "Monomial: k must be positive");
    require(a_.size() == static_cast<std::size_t>(k_) &&
                b_.size() == static_cast<std::size_t>(k_),
            "Monomial: exponent vectors must have length k");
    for (int e : a_) require(e >= 0, "Monomial: negative x-exponent");
    for (int e : b_) require(e >= 0, "Monomial: negative y-exponent");
}

Monomial Monomial::one(int k) {
    return Monomial(k, std::vector<int>(static_cast<std::size_t>(k), 0),
                    std::vector<int>(static_cast<std::size_t>(k), 0));
}

Monomial Monomial::var_x(int k, int i) {
    require(1 <= i && i <= k, "var_x: index out of range");
    Monomial m = one(k);
    m.a_[static_cast<std::size_t>(i - 1)] = 1;
    return m;
}

Monomial Monomial::var_y(int k, int i) {
    require(1 <= i && i <= k, "var_y: index out of range");
    Monomial m = one(k);
    m.b_[static_cast<std::size_t>(i - 1)] = 1;
    return m;
}

Monomial Monomial::from_powers(int k,
                               const std::vector<std::pair<int, int>>& xs,
                               const std::vector<std::pair<int, int>>& ys) {
    Monomial m = one(k);
    for (auto [i, e] : xs) {
        require(1 <= i && i <= k, "from_powers: x index out of range");
        require(e >= 0, "from_powers: negative exponent");
        m.a_[static_cast<std::size_t>(i - 1)] += e;
    }
    for (auto [i, e] : ys) {
        require(1 <= i && i <= k, "from_powers: y index out of range");
        require(e >= 0, "from_powers: negative exponent");
        m.b_[static_cast<std::size_t>(i - 1)] += e;
    }
    return m;
}

int Monomial::degree() const {
    return std::accumulate(a_.begin(), a_.end(), 0) +
           std::accumulate(b_.begin(), b_.end(), 0);
}

bool Monomial::pure_x() const {
    return std::all_of(b_.begin(), b_.end(), [](int e) { return e == 0; });
}

bool Monomial::pure_y() const {
    return std::all_of(a_.begin(), a_.end(), [](int e) { return e == 0; });
}

bool Monomial::mixed() const { return !pure_x() && !pure_y(); }

long long Monomial::weighted_degree() const {
    long long d = 0;
    for (int i = 0; i < k_; ++i)
        d += static_cast<long long>(i + 1) * (a_[static_cast<std::size_t>(i)] -
                                              b_[static_cast<std::size_t>(i)]);
    return d;
}

long long Monomial::omega_index() const {
    long long d = 0;
    for (int i = 0; i < k_; ++i)
        d += static_cast<long long>(i) * a_[static_cast<std::size_t>(i)];
    return d;
}

long long Monomial::eta_index() const {
    long long d = 0;
    for (int i = 0; i < k_; ++i)
        d += static_cast<long long>(i) * b_[static_cast<std::size_t>(i)];
    return d;
}

Monomial Monomial::involution() const { return Monomial(k_, b_, a_); }

Monomial Monomial::operator*(const Monomial& rhs) const {
    require(k_ == rhs.k_, "Monomial product: mismatched k");
    std::vector<int> a = a_, b = b_;
    for (int i = 0; i < k_; ++i) {
        a[static_cast<std::size_t>(i)] += rhs.a_[static_cast<std::size_t>(i)];
        b[static_cast<std::size_t>(i)] += rhs.b_[static_cast<std::size_t>(i)];
    }
    return Monomial(k_, std::move(a), std::move(b));
}

bool Monomial::operator<(const Monomial& rhs) const {
    require(k_ == rhs.k_, "Monomial comparison: mismatched k");
    int d1 = degree(), d2 = rhs.degree();
    if (d1 != d2) return d1 < d2;
    for (int i = 0; i < k_; ++i)
        if (a_[static_cast<std::size_t>(i)] != rhs.a_[static_cast<std::size_t>(i)])
            return a_[static_cast<std::size_t>(i)] > rhs.a_[static_cast<std::size_t>(i)];
    for (int i = 0; i < k_; ++i)
        if (b_[static_cast<std::size_t>(i)] != rhs.b_[static_cast<std::size_t>(i)])
            return b_[static_cast<std::size_t>(i)] > rhs.b_[static_cast<std::size_t>(i)];
    return false;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](char v, int i, int e) {
        if (e == 0) return;
        if (!first) os << '*';
        first = false;
        os << v << i;
        if (e != 1) os << '^' << e;
    };
    for (int i = 0; i < k_; ++i) emit('x', i + 1, a_[static_cast<std::size_t>(i)]);
    for (int i = 0; i < k_; ++i) emit('y', i + 1, b_[static_cast<std::size_t>(i)]);
    if (first) return "1";
    return os.str();
}

Monomial Monomial::parse(const std::string& text, int k) {
    require(k >= 1, "Monomial::parse: k must be positive");
    std::vector<int> a(static_cast<std::size_t>(k), 0), b(static_cast<std::size_t>(k), 0);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_uint = [&](const char* what) -> long long {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        require(pos > start, std::string("Monomial::parse: expected ") + what);
        require(pos - start <= 9, "Monomial::parse: number too large");
        return std::stoll(text.substr(start, pos - start));
    };

    skip_ws();
    require(pos < text.size(), "Monomial::parse: empty input");
    if (text[pos] == '1') {
        ++pos;
        skip_ws();
        require(pos == text.size(), "Monomial::parse: trailing characters after 1");
        return one(k);
    }
    while (true) {
        skip_ws();
        require(pos < text.size(), "Monomial::parse: expected variable");
        char v = text[pos];
        require(v == 'x' || v == 'y', "Monomial::parse: expected x or y");
        ++pos;
        long long idx = read_uint("variable index");
        require(1 <= idx && idx <= k, "Monomial::parse: variable index out of range");
        long long exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            require(pos < text.size() && text[pos] != '-',
                    "Monomial::parse: negative exponent");
            exp = read_uint("exponent");
        }
        auto& target = (v == 'x') ? a : b;
        long long cur = target[static_cast<std::size_t>(idx - 1)];
        require(cur + exp <= 1000000, "Monomial::parse: exponent too large");
        target[static_cast<std::size_t>(idx - 1)] = static_cast<int>(cur + exp);
        skip_ws();
        if (pos == text.size()) break;
        require(text[pos] == '*', "Monomial::parse: expected '*'");
        ++pos;
    }
    return Monomial(k, std::move(a), std::move(b));
}

RhoWeights::RhoWeights(int k_in, std::vector<Int> lambda_in, std::vector<Int> nu_in)
    : k(k_in), lambda(std::move(lambda_in)), nu(std::move(nu_in)) {
    require(k >= 1, "RhoWeights: k must be positive");
    require(lambda.size() == static_cast<std::size_t>(k) &&
                nu.size() == static_cast<std::size_t>(k),
            "RhoWeights: weight vectors must have length k");
}

Int RhoWeights::trace() const {
    Int t = 0;
    for (const Int& v : lambda) t += v;
    for (const Int& v : nu) t += v;
    return t;
}

RhoWeights RhoWeights::swapped() const { return RhoWeights(k, nu, lambda); }

std::vector<Int> RhoWeights::flat() const {
    std::vector<Int> w;
    w.reserve(2 * static_cast<std::size_t>(k));
    w.insert(w.end(), lambda.begin(), lambda.end());
    w.insert(w.end(), nu.begin(), nu.end());
    return w;
}

RhoWeights RhoWeights::from_flat(int k, const std::vector<Int>& w) {
    require(w.size() == 2 * static_cast<std::size_t>(k),
            "RhoWeights::from_flat: expected 2k entries");
    return RhoWeights(k, std::vector<Int>(w.begin(), w.begin() + k),
                      std::vector<Int>(w.begin() + k, w.end()));
}

Int OccurrenceVector::total() const {
    Int t = 0;
    for (const Int& v : x) t += v;
    for (const Int& v : y) t += v;
    return t;
}

Int rho_weight(const Monomial& m, const RhoWeights& r) {
    require(m.k() == r.k, "rho_weight: dimension mismatch");
    Int w = 0;
    for (int i = 1; i <= m.k(); ++i) {
        w += m.ax(i) * r.lambda[static_cast<std::size_t>(i - 1)];
        w += m.by(i) * r.nu[static_cast<std::size_t>(i - 1)];
    }
    return w;
}

Int rho_weight(const OccurrenceVector& occ, const RhoWeights& r) {
    require(occ.k() == r.k, "rho_weight: dimension mismatch");
    Int w = 0;
    for (int i = 0; i < r.k; ++i) {
        w += occ.x[static_cast<std::size_t>(i)] * r.lambda[static_cast<std::size_t>(i)];
        w += occ.y[static_cast<std::size_t>(i)] * r.nu[static_cast<std::size_t>(i)];
    }
    return w;
}

std::vector<Monomial> enumerate_monomials(int k, int m, Purity purity) {
    require(k >= 1, "enumerate_monomials: k must be positive");
    require(m >= 1, "enumerate_monomials: m must be positive");
    const int n = 2 * k;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    c[0] = m;
    std::vector<Monomial> out;
    while (true) {
        Monomial mon(k, std::vector<int>(c.begin(), c.begin() + k),
                     std::vector<int>(c.begin() + k, c.end()));
        bool keep = false;
        switch (purity) {
            case Purity::PureX: keep = mon.pure_x(); break;
            case Purity::PureY: keep = mon.pure_y(); break;
            case Purity::Mixed: keep = mon.mixed(); break;
            case Purity::All: keep = true; break;
        }
        if (keep) out.push_back(std::move(mon));

        // successor in descending lexicographic order of the exponent tuple
        int i = n - 2;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == 0) --i;
        if (i < 0) break;
        int tail = 1;
        for (int t = i + 1; t < n; ++t) {
            tail += c[static_cast<std::size_t>(t)];
            c[static_cast<std::size_t>(t)] = 0;
        }
        c[static_cast<std::size_t>(i)] -= 1;
        c[static_cast<std::size_t>(i + 1)] = tail;
    }
    return out;
}

OccurrenceVector occurrences(const std::vector<Monomial>& ms, int k) {
    OccurrenceVector occ(k);
    for (const Monomial& m : ms) {
        require(m.k() == k, "occurrences: monomials must share k");
        for (int i = 0; i < k; ++i) {
            occ.x[static_cast<std::size_t>(i)] += m.a()[static_cast<std::size_t>(i)];
            occ.y[static_cast<std::size_t>(i)] += m.b()[static_cast<std::size_t>(i)];
        }
    }
    return occ;
}

OccurrenceVector occurrences(const std::vector<Monomial>& ms) {
    require(!ms.empty(), "occurrences: empty multiset needs an explicit k");
    return occurrences(ms, ms.front().k());
}

}  // namespace dacurve
