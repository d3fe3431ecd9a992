#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/rational.hpp>
#include <gwmirror/trunc_series.hpp>

namespace gwmirror {

// Coordinates of one term H^h t^k q^d.
struct MixedIndex {
    std::size_t h = 0;
    std::size_t t = 0;
    std::size_t q = 0;
    friend bool operator==(const MixedIndex&, const MixedIndex&) = default;
    std::string str() const {
        return "H^" + std::to_string(h) + " t^" + std::to_string(t) + " q^" + std::to_string(q);
    }
};

// sum c[h][k][d] H^h t^k q^d with h < h_order (H^h_order = 0), k <= t_cap and
// d <= q_order. q stands for e^t: the t-polynomial part and the q-series
// part never convert into each other except through d/dt.
template <typename R>
class MixedSeries {
public:
    MixedSeries(std::size_t h_order, std::size_t t_cap, std::size_t q_order)
        : h_order_(h_order), t_cap_(t_cap), q_order_(q_order), c_(h_order * (t_cap + 1) * (q_order + 1), R(0)) {
        if (h_order == 0) throw StructuralError("MixedSeries: H nilpotency order must be >= 1");
    }

    // Embeds a pure q-series as the H^0 t^0 component.
    static MixedSeries from_series(const TruncSeries<R>& s, std::size_t h_order, std::size_t t_cap) {
        MixedSeries m(h_order, t_cap, s.order());
        for (std::size_t d = 0; d <= s.order(); ++d) m.at(0, 0, d) = s[d];
        return m;
    }

    std::size_t h_order() const { return h_order_; }
    std::size_t t_cap() const { return t_cap_; }
    std::size_t q_order() const { return q_order_; }

    R& at(std::size_t h, std::size_t k, std::size_t d) { return c_.at(index(h, k, d)); }
    const R& at(std::size_t h, std::size_t k, std::size_t d) const { return c_.at(index(h, k, d)); }

    // q-series multiplying t^k H^h.
    TruncSeries<R> series(std::size_t h, std::size_t k) const {
        TruncSeries<R> s(q_order_);
        for (std::size_t d = 0; d <= q_order_; ++d) s[d] = at(h, k, d);
        return s;
    }
    void set_series(std::size_t h, std::size_t k, const TruncSeries<R>& s) {
        if (s.order() != q_order_) throw StructuralError("MixedSeries::set_series: order mismatch");
        for (std::size_t d = 0; d <= q_order_; ++d) at(h, k, d) = s[d];
    }

    // The H^h component as a series with h_order 1.
    MixedSeries component(std::size_t h) const {
        MixedSeries r(1, t_cap_, q_order_);
        for (std::size_t k = 0; k <= t_cap_; ++k)
            for (std::size_t d = 0; d <= q_order_; ++d) r.at(0, k, d) = at(h, k, d);
        return r;
    }

    // Largest t-degree with a nonzero coefficient, or nullopt for zero.
    std::optional<std::size_t> t_degree() const {
        std::optional<std::size_t> deg;
        for (std::size_t h = 0; h < h_order_; ++h)
            for (std::size_t k = 0; k <= t_cap_; ++k)
                for (std::size_t d = 0; d <= q_order_; ++d)
                    if (!is_zero_coeff(at(h, k, d)) && (!deg || k > *deg)) deg = k;
        return deg;
    }

    // First nonzero coefficient in (h, t, q) lexicographic order.
    std::optional<MixedIndex> first_nonzero() const {
        for (std::size_t h = 0; h < h_order_; ++h)
            for (std::size_t d = 0; d <= q_order_; ++d)
                for (std::size_t k = 0; k <= t_cap_; ++k)
                    if (!is_zero_coeff(at(h, k, d))) return MixedIndex{h, k, d};
        return std::nullopt;
    }
    bool is_zero() const { return !first_nonzero().has_value(); }

    friend MixedSeries operator+(MixedSeries a, const MixedSeries& b) {
        a.check(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] + b.c_[i];
        return a;
    }
    friend MixedSeries operator-(MixedSeries a, const MixedSeries& b) {
        a.check(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] - b.c_[i];
        return a;
    }
    friend MixedSeries operator*(MixedSeries a, const R& s) {
        for (auto& x : a.c_) x = x * s;
        return a;
    }
    friend MixedSeries operator*(const R& s, MixedSeries a) { return std::move(a) * s; }

    // Product truncated in all three gradings.
    friend MixedSeries operator*(const MixedSeries& a, const MixedSeries& b) {
        a.check(b);
        MixedSeries r(a.h_order_, a.t_cap_, a.q_order_);
        for (std::size_t h1 = 0; h1 < a.h_order_; ++h1)
            for (std::size_t k1 = 0; k1 <= a.t_cap_; ++k1)
                for (std::size_t d1 = 0; d1 <= a.q_order_; ++d1) {
                    const R& x = a.at(h1, k1, d1);
                    if (is_zero_coeff(x)) continue;
                    for (std::size_t h2 = 0; h1 + h2 < a.h_order_; ++h2)
                        for (std::size_t k2 = 0; k1 + k2 <= a.t_cap_; ++k2)
                            for (std::size_t d2 = 0; d1 + d2 <= a.q_order_; ++d2) {
                                const R& y = b.at(h2, k2, d2);
                                if (is_zero_coeff(y)) continue;
                                R& z = r.at(h1 + h2, k1 + k2, d1 + d2);
                                z = z + x * y;
                            }
                }
        return r;
    }
    friend MixedSeries operator*(const MixedSeries& a, const TruncSeries<R>& s) {
        if (s.order() != a.q_order_) throw StructuralError("MixedSeries * TruncSeries: order mismatch");
        MixedSeries r(a.h_order_, a.t_cap_, a.q_order_);
        for (std::size_t h = 0; h < a.h_order_; ++h)
            for (std::size_t k = 0; k <= a.t_cap_; ++k)
                for (std::size_t d1 = 0; d1 <= a.q_order_; ++d1) {
                    const R& x = a.at(h, k, d1);
                    if (is_zero_coeff(x)) continue;
                    for (std::size_t d2 = 0; d1 + d2 <= a.q_order_; ++d2) {
                        R& z = r.at(h, k, d1 + d2);
                        z = z + x * s[d2];
                    }
                }
        return r;
    }
    friend MixedSeries operator*(const TruncSeries<R>& s, const MixedSeries& a) { return a * s; }

    friend bool operator==(const MixedSeries& a, const MixedSeries& b) {
        return a.h_order_ == b.h_order_ && a.t_cap_ == b.t_cap_ && a.q_order_ == b.q_order_ && a.c_ == b.c_;
    }

    // d/dt with q = e^t: d/dt (t^k q^d) = k t^(k-1) q^d + d t^k q^d.
    MixedSeries d_dt() const {
        MixedSeries r(h_order_, t_cap_, q_order_);
        for (std::size_t h = 0; h < h_order_; ++h)
            for (std::size_t k = 0; k <= t_cap_; ++k)
                for (std::size_t d = 0; d <= q_order_; ++d) {
                    const R& x = at(h, k, d);
                    if (is_zero_coeff(x)) continue;
                    if (k > 0) {
                        R& z = r.at(h, k - 1, d);
                        z = z + x * R(static_cast<long>(k));
                    }
                    if (d > 0) {
                        R& z = r.at(h, k, d);
                        z = z + x * R(static_cast<long>(d));
                    }
                }
        return r;
    }

    // Multiplication by q = e^t.
    MixedSeries times_q() const {
        MixedSeries r(h_order_, t_cap_, q_order_);
        for (std::size_t h = 0; h < h_order_; ++h)
            for (std::size_t k = 0; k <= t_cap_; ++k)
                for (std::size_t d = 0; d < q_order_; ++d) r.at(h, k, d + 1) = at(h, k, d);
        return r;
    }

    // Multiplication by H.
    MixedSeries times_H() const {
        MixedSeries r(h_order_, t_cap_, q_order_);
        for (std::size_t h = 0; h + 1 < h_order_; ++h)
            for (std::size_t k = 0; k <= t_cap_; ++k)
                for (std::size_t d = 0; d <= q_order_; ++d) r.at(h + 1, k, d) = at(h, k, d);
        return r;
    }

    // Same content with a different t cap; refuses to drop nonzero terms.
    MixedSeries with_t_cap(std::size_t t_cap) const {
        MixedSeries r(h_order_, t_cap, q_order_);
        for (std::size_t h = 0; h < h_order_; ++h)
            for (std::size_t k = 0; k <= t_cap_; ++k)
                for (std::size_t d = 0; d <= q_order_; ++d) {
                    if (k > t_cap) {
                        if (!is_zero_coeff(at(h, k, d))) throw StructuralError("with_t_cap would drop terms");
                        continue;
                    }
                    r.at(h, k, d) = at(h, k, d);
                }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t h = 0; h < h_order_; ++h)
            for (std::size_t k = 0; k <= t_cap_; ++k)
                for (std::size_t d = 0; d <= q_order_; ++d) {
                    const R& x = at(h, k, d);
                    if (is_zero_coeff(x)) continue;
                    if (!first) os << " + ";
                    first = false;
                    os << "(" << to_string(x) << ")" << MixedIndex{h, k, d}.str();
                }
        return first ? "0" : os.str();
    }

private:
    static bool is_zero_coeff(const R& c) {
        using gwmirror::is_zero;
        return is_zero(c);
    }
    std::size_t index(std::size_t h, std::size_t k, std::size_t d) const {
        if (h >= h_order_ || k > t_cap_ || d > q_order_) throw StructuralError("MixedSeries index out of caps");
        return (h * (t_cap_ + 1) + k) * (q_order_ + 1) + d;
    }
    void check(const MixedSeries& o) const {
        if (o.h_order_ != h_order_ || o.t_cap_ != t_cap_ || o.q_order_ != q_order_)
            throw StructuralError("MixedSeries caps mismatch");
    }

    std::size_t h_order_;
    std::size_t t_cap_;
    std::size_t q_order_;
    std::vector<R> c_;
};

using QMixedSeries = MixedSeries<Rational>;

// Change of variables t = T - g(q), where q is then re-expressed through
// q' = q exp(g(q)): q = q' w(q') with w = series_reversion(exp(g)). Returns
// the series in (T, q'). Requires g(0) = 0.
template <typename R>
MixedSeries<R> mixed_substitute(const MixedSeries<R>& M, const TruncSeries<R>& g) {
    using gwmirror::is_zero;
    if (!is_zero(g[0])) throw DomainError("mixed_substitute: g(0) must be 0");
    const std::size_t D = M.q_order();
    if (g.order() != D) throw StructuralError("mixed_substitute: order mismatch");
    const TruncSeries<R> w = series_reversion(series_exp(g));
    const TruncSeries<R> q_of_qp = w.shift(1);               // q as a series in q'
    const TruncSeries<R> g_of_qp = series_compose(g, q_of_qp);  // g(q(q'))
    const TruncSeries<R> minus_g = -g_of_qp;

    // (-g)^j and w^d as q'-series.
    std::vector<TruncSeries<R>> neg_g_pow{TruncSeries<R>::one(D)};
    for (std::size_t j = 1; j <= M.t_cap(); ++j) neg_g_pow.push_back(neg_g_pow.back() * minus_g);
    std::vector<TruncSeries<R>> w_pow{TruncSeries<R>::one(D)};
    for (std::size_t d = 1; d <= D; ++d) w_pow.push_back(w_pow.back() * w);

    MixedSeries<R> out(M.h_order(), M.t_cap(), D);
    for (std::size_t h = 0; h < M.h_order(); ++h)
        for (std::size_t k = 0; k <= M.t_cap(); ++k)
            for (std::size_t d = 0; d <= D; ++d) {
                const R& c = M.at(h, k, d);
                if (is_zero(c)) continue;
                // c t^k q^d = c (T - g)^k q'^d w^d
                const TruncSeries<R> qd = w_pow[d].shift(d) * c;
                for (std::size_t j = 0; j <= k; ++j) {
                    // binom(k, j) T^j (-g)^(k-j)
                    const TruncSeries<R> part = qd * neg_g_pow[k - j] * R(Rational(binomial(k, j)));
                    for (std::size_t e = 0; e <= D; ++e) {
                        R& z = out.at(h, j, e);
                        z = z + part[e];
                    }
                }
            }
    return out;
}

}  // namespace gwmirror
