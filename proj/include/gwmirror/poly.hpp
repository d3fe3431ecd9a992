#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/rational.hpp>

namespace gwmirror {

// Dense univariate polynomial c[0] + c[1] x + ... over a commutative ring R.
// Trailing zeros are always trimmed, so the zero polynomial has no
// coefficients and degree() == -1.
template <typename R>
class Poly {
public:
    Poly() = default;
    Poly(R constant) {  // NOLINT(google-explicit-constructor)
        coeffs_.push_back(std::move(constant));
        trim();
    }
    Poly(std::initializer_list<R> c) : coeffs_(c) { trim(); }
    explicit Poly(std::vector<R> c) : coeffs_(std::move(c)) { trim(); }

    static Poly monomial(std::size_t k, R c = R(1)) {
        std::vector<R> v(k + 1, R(0));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }
    // x - a
    static Poly linear_root(const R& a) { return Poly({R(0) - a, R(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<R>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R(0); }
    const R& leading() const { return coeffs_.back(); }

    template <typename X>
    X eval(const X& x) const {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    // p(-x)
    Poly reflect() const {
        std::vector<R> v = coeffs_;
        for (std::size_t k = 1; k < v.size(); k += 2) v[k] = R(0) - v[k];
        return Poly(std::move(v));
    }

    // p(s x)
    Poly scale_arg(const R& s) const {
        std::vector<R> v = coeffs_;
        R pw(1);
        for (auto& c : v) {
            c = c * pw;
            pw = pw * s;
        }
        return Poly(std::move(v));
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<R> v(coeffs_.size() - 1, R(0));
        for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * R(static_cast<long>(k));
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero_coeff(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str(const char* var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (is_zero_coeff(coeffs_[k])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << to_string(coeffs_[k]) << ")";
            if (k >= 1) os << "*" << var;
            if (k >= 2) os << "^" << k;
        }
        return os.str();
    }

private:
    static bool is_zero_coeff(const R& c) {
        using gwmirror::is_zero;
        return is_zero(c);
    }
    void trim() {
        while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

template <typename R>
bool is_zero(const Poly<R>& p) {
    return p.is_zero();
}

template <typename R>
std::string to_string(const Poly<R>& p) {
    return p.str();
}

using QPoly = Poly<Rational>;

// Euclidean division over a field: a = q b + r with deg r < deg b.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<Rational> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Rational> q(r.size() - db, Rational(0));
    const Rational inv_lead = 1 / bc.back();
    for (std::size_t k = r.size(); k-- > db;) {
        if (sgn(r[k]) == 0) continue;
        Rational c = r[k] * inv_lead;
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * bc[j];
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

inline QPoly make_monic(const QPoly& p) {
    if (p.is_zero()) return p;
    if (p.leading() == 1) return p;
    const Rational inv = 1 / p.leading();
    std::vector<Rational> v = p.coeffs();
    for (auto& c : v) c *= inv;
    return QPoly(std::move(v));
}

// Monic gcd. Remainders are normalized to monic at every step to keep the
// rational coefficients from growing.
inline QPoly gcd(QPoly a, QPoly b) {
    a = make_monic(a);
    b = make_monic(b);
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return a;
}

inline QPoly exact_quotient(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
}

}  // namespace gwmirror
