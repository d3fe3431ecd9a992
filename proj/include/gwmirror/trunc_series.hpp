#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/rational.hpp>

namespace gwmirror {

// c[0] + c[1] q + ... + c[D] q^D modulo q^(D+1), dense, over a Q-algebra R.
// Binary operations require equal truncation orders; callers truncate
// explicitly.
template <typename R>
class TruncSeries {
public:
    TruncSeries() : coeffs_(1, R(0)) {}
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1, R(0)) {}
    TruncSeries(std::size_t order, std::vector<R> c) : coeffs_(std::move(c)) {
        if (coeffs_.size() > order + 1) throw StructuralError("TruncSeries: more coefficients than order allows");
        coeffs_.resize(order + 1, R(0));
    }

    static TruncSeries constant(std::size_t order, R c) {
        TruncSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }
    static TruncSeries one(std::size_t order) { return constant(order, R(1)); }
    // c q^k
    static TruncSeries monomial(std::size_t order, std::size_t k, R c = R(1)) {
        TruncSeries s(order);
        if (k <= order) s.coeffs_[k] = std::move(c);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const R& operator[](std::size_t k) const { return coeffs_.at(k); }
    R& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    TruncSeries truncate(std::size_t order) const {
        if (order > this->order()) throw StructuralError("TruncSeries::truncate cannot raise the order");
        return TruncSeries(order, std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
    }

    template <typename F>
    auto map(F&& f) const -> TruncSeries<decltype(f(std::declval<const R&>()))> {
        using S = decltype(f(std::declval<const R&>()));
        std::vector<S> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(f(c));
        return TruncSeries<S>(order(), std::move(v));
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
        return *this;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator-(const TruncSeries& a) { return TruncSeries(a.order()) - a; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        const std::size_t D = a.order();
        TruncSeries r(D);
        for (std::size_t i = 0; i <= D; ++i) {
            if (is_zero_coeff(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j <= D; ++j) r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const R& c) {
        TruncSeries r = a;
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }
    friend TruncSeries operator*(const R& c, const TruncSeries& a) { return a * c; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

    // Multiply by q^k (drops what falls past the order).
    TruncSeries shift(std::size_t k) const {
        TruncSeries r(order());
        for (std::size_t i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
        return r;
    }

    // q d/dq
    TruncSeries euler_derivative() const {
        TruncSeries r = *this;
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = r.coeffs_[k] * R(static_cast<long>(k));
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k) os << " + ";
            os << "(" << to_string(coeffs_[k]) << ")q^" << k;
        }
        os << " + O(q^" << coeffs_.size() << ")";
        return os.str();
    }

private:
    static bool is_zero_coeff(const R& c) {
        using gwmirror::is_zero;
        return is_zero(c);
    }
    void check_order(const TruncSeries& o) const {
        if (o.order() != order()) {
            throw StructuralError("TruncSeries order mismatch: " + std::to_string(order()) + " vs " +
                                  std::to_string(o.order()));
        }
    }

    std::vector<R> coeffs_;
};

using QSeries = TruncSeries<Rational>;

template <typename R>
TruncSeries<R> series_mul(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    return a * b;
}

// Multiplicative inverse; needs an invertible constant term.
template <typename R>
TruncSeries<R> series_inverse(const TruncSeries<R>& b) {
    using gwmirror::is_zero;
    if (is_zero(b[0])) throw DomainError("series_inverse: constant term is not invertible");
    const std::size_t D = b.order();
    TruncSeries<R> c(D);
    const R inv0 = R(1) / b[0];
    c[0] = inv0;
    for (std::size_t n = 1; n <= D; ++n) {
        R acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc = acc + b[k] * c[n - k];
        c[n] = R(0) - acc * inv0;
    }
    return c;
}

template <typename R>
TruncSeries<R> series_div(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    if (a.order() != b.order()) throw StructuralError("series_div: order mismatch");
    return a * series_inverse(b);
}

// exp(a) for a with zero constant term, via n e_n = sum_k k a_k e_{n-k}.
template <typename R>
TruncSeries<R> series_exp(const TruncSeries<R>& a) {
    using gwmirror::is_zero;
    if (!is_zero(a[0])) throw DomainError("series_exp: constant term must be zero");
    const std::size_t D = a.order();
    TruncSeries<R> e(D);
    e[0] = R(1);
    for (std::size_t n = 1; n <= D; ++n) {
        R acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            if (is_zero(a[k])) continue;
            acc = acc + R(static_cast<long>(k)) * a[k] * e[n - k];
        }
        e[n] = acc * R(frac(1, static_cast<long>(n)));
    }
    return e;
}

// log(b) for b with constant term 1, via n l_n = n b_n - sum_{k<n} k l_k b_{n-k}.
template <typename R>
TruncSeries<R> series_log(const TruncSeries<R>& b) {
    if (!(b[0] == R(1))) throw DomainError("series_log: constant term must be 1");
    const std::size_t D = b.order();
    TruncSeries<R> l(D);
    for (std::size_t n = 1; n <= D; ++n) {
        R acc = R(static_cast<long>(n)) * b[n];
        for (std::size_t k = 1; k < n; ++k) acc = acc - R(static_cast<long>(k)) * l[k] * b[n - k];
        l[n] = acc * R(frac(1, static_cast<long>(n)));
    }
    return l;
}

// a(b(q)) for b with zero constant term, by Horner's rule.
template <typename R, typename S>
TruncSeries<S> series_compose(const TruncSeries<R>& a, const TruncSeries<S>& b) {
    using gwmirror::is_zero;
    if (!is_zero(b[0])) throw DomainError("series_compose: inner series must have zero constant term");
    if (a.order() != b.order()) throw StructuralError("series_compose: order mismatch");
    const std::size_t D = a.order();
    TruncSeries<S> acc(D);
    for (std::size_t k = D + 1; k-- > 0;) {
        acc = acc * b;
        acc[0] = acc[0] + S(a[k]);
    }
    return acc;
}

// Given v with v(0) = 1 describing the map q -> q v(q), returns w with
// w(0) = 1 such that q = q' w(q') inverts it: q' w(q') v(q' w(q')) = q'.
// Fixed point w = 1 / v(q' w): coefficient k of the right side depends only
// on w_0..w_{k-1}, so D passes settle every coefficient.
template <typename R>
TruncSeries<R> series_reversion(const TruncSeries<R>& v) {
    if (!(v[0] == R(1))) throw DomainError("series_reversion: v(0) must be 1");
    const std::size_t D = v.order();
    TruncSeries<R> w = TruncSeries<R>::one(D);
    for (std::size_t pass = 0; pass < D; ++pass) {
        TruncSeries<R> inner = w.shift(1);  // q' w(q')
        w = series_inverse(series_compose(v, inner));
    }
    return w;
}

}  // namespace gwmirror
