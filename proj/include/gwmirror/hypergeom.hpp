#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/hbar_rational.hpp>
#include <gwmirror/htrunc_poly.hpp>
#include <gwmirror/lambda.hpp>
#include <gwmirror/mixed_series.hpp>
#include <gwmirror/poly.hpp>
#include <gwmirror/rational.hpp>
#include <gwmirror/trunc_series.hpp>

namespace gwmirror {

// Degree-l hypersurface in P^m, q-truncation order, and the H nilpotency
// order used for the S*_X expansion (m for "mod H^m", m+1 for "mod H^(m+1)").
struct HypergeomConfig {
    unsigned m = 4;
    unsigned l = 5;
    std::size_t order = 6;
    std::size_t h_cap = 4;

    static HypergeomConfig make(unsigned m, unsigned l, std::size_t order) { return {m, l, order, m}; }

    void validate() const {
        if (m < 1) throw DomainError("m must be >= 1");
        if (l < 1 || l > m + 1) throw DomainError("hypersurface degree must satisfy 1 <= l <= m+1");
        if (order < 1) throw DomainError("order must be >= 1");
        if (h_cap != m && h_cap != m + 1) throw DomainError("h_cap must be m or m+1");
    }
};

using HbarSeries = TruncSeries<HbarRational>;

// {Y_i}_{i=0..m}: q-series with hbar-rational coefficients at a fixed
// numeric lambda.
struct CorrelatorFamily {
    LambdaTuple lambda;
    std::vector<HbarSeries> entries;
    unsigned m = 0;
    unsigned l = 0;

    std::size_t order() const { return entries.empty() ? 0 : entries.front().order(); }
    std::size_t size() const { return entries.size(); }
    const HbarSeries& operator[](std::size_t i) const { return entries.at(i); }
};

// sum_d e^{(H+d)t} prod_{r=1}^{ld}(lH+r) / prod_{r=1}^{d}(H+r)^{m+1}
// modulo H^h_cap, with q = e^t. The H^b component is I_b(t).
inline QMixedSeries hyper_series_SX(const HypergeomConfig& cfg) {
    cfg.validate();
    using HP = HTruncPoly<Rational>;
    const std::size_t N = cfg.h_cap;
    const std::size_t D = cfg.order;
    QMixedSeries S(N, N - 1, D);

    HP numer = HP::constant(N, Rational(1));
    HP denom = HP::constant(N, Rational(1));
    for (std::size_t d = 0; d <= D; ++d) {
        if (d > 0) {
            for (std::size_t r = cfg.l * (d - 1) + 1; r <= cfg.l * d; ++r)
                numer *= HP::linear(N, Rational(static_cast<long>(r)), Rational(cfg.l));
            denom *= HP::linear(N, Rational(static_cast<long>(d)), Rational(1)).pow(cfg.m + 1);
        }
        const HP A = numer * denom.inverse();
        // times e^{Ht} = sum_k H^k t^k / k!
        for (std::size_t h = 0; h < N; ++h)
            for (std::size_t k = 0; k <= h; ++k) S.at(h, k, d) = A[h - k] / Rational(factorial(k));
    }
    return S;
}

// I_b(t) as an H^0-only mixed series.
inline QMixedSeries hyper_component(const QMixedSeries& S, std::size_t b) { return S.component(b); }

// Fundamental solution of (hbar d/dt)^{m+1} - e^t on P^m:
// sum_d e^{(H/hbar + d)t} / prod_{r=1}^{d}(H + r hbar)^{m+1} mod H^{m+1}.
// Coefficients are polynomials in u = 1/hbar; hbar_depth bounds their
// degree and must be at least (m+1) order + m.
inline MixedSeries<QPoly> hyper_series_Pm(unsigned m, std::size_t order, std::size_t hbar_depth) {
    if (m < 1) throw DomainError("m must be >= 1");
    const std::size_t N = m + 1;
    const std::size_t needed = (m + 1) * order + m;
    if (hbar_depth < needed)
        throw StructuralError("hyper_series_Pm: hbar_depth " + std::to_string(hbar_depth) + " < required " +
                              std::to_string(needed));
    using HP = HTruncPoly<QPoly>;
    MixedSeries<QPoly> S(N, m, order);

    HP A = HP::constant(N, QPoly(Rational(1)));
    for (std::size_t d = 0; d <= order; ++d) {
        if (d > 0) {
            // 1/(H + d hbar) = sum_k (-1)^k H^k u^{k+1} / d^{k+1}
            HP inv(N);
            for (std::size_t k = 0; k < N; ++k) {
                Rational c = Rational(1) / pow(Rational(static_cast<long>(d)), static_cast<unsigned>(k + 1));
                if (k % 2) c = -c;
                inv[k] = QPoly::monomial(k + 1, c);
            }
            A *= inv.pow(m + 1);
        }
        // times e^{H u t} = sum_k H^k u^k t^k / k!
        for (std::size_t h = 0; h < N; ++h)
            for (std::size_t k = 0; k <= h; ++k)
                S.at(h, k, d) = A[h - k] * QPoly::monomial(k, Rational(1) / Rational(factorial(k)));
    }
    return S;
}

// u^{m+1} D applied to S_{P^m}, i.e. D^{m+1} S - u^{m+1} q S with D = d/dt.
// Multiplying the operator by hbar^{-(m+1)} keeps every coefficient
// polynomial in u; its vanishing is equivalent to annihilation by
// (hbar d/dt)^{m+1} - e^t.
inline MixedSeries<QPoly> quantum_de_residual_Pm(const MixedSeries<QPoly>& S, unsigned m) {
    MixedSeries<QPoly> lhs = S;
    for (unsigned k = 0; k <= m; ++k) lhs = lhs.d_dt();
    return lhs - S.times_q() * QPoly::monomial(m + 1, Rational(1));
}

// <tau_{dm+d-2}(T_m)>_d on P^m read off S_{P^m}: the u^{(m+1)d} coefficient
// of the H^0 t^0 q^d term.
inline Rational descendent_value(unsigned m, std::size_t d) {
    if (d < 1) throw DomainError("descendent_value: degree must be >= 1");
    const std::size_t depth = (m + 1) * d + m;
    MixedSeries<QPoly> S = hyper_series_Pm(m, d, depth);
    return S.at(0, 0, d).coeff((m + 1) * d);
}

// F(q) = sum_d ((m+1)d)!/(d!)^{m+1} q^d and
// G_l(q) = sum_{d>=1} ((m+1)d)!/(d!)^{m+1} H_{ld} q^d (H_n harmonic).
inline std::pair<QSeries, QSeries> F_and_G(unsigned m, unsigned l, std::size_t order) {
    if (l < 1 || l > m + 1) throw DomainError("F_and_G: need 1 <= l <= m+1");
    QSeries F(order), G(order);
    for (std::size_t d = 0; d <= order; ++d) {
        Integer dfact = factorial(d);
        Integer den = 1;
        for (unsigned k = 0; k <= m; ++k) den *= dfact;
        Rational c = frac(factorial((m + 1) * d), den);
        F[d] = c;
        if (d > 0) G[d] = c * harmonic(l * d);
    }
    return {F, G};
}

// Z*_i(q, hbar) = sum_d q^d prod_{r=1}^{ld}(l lambda_i + r hbar)
//                          / prod_alpha prod_{r=1}^{d}(lambda_i - lambda_alpha + r hbar).
inline CorrelatorFamily zstar_family(unsigned m, unsigned l, std::size_t order, const LambdaTuple& lambda) {
    if (lambda.size() != m + 1) throw DomainError("zstar_family: lambda must have m+1 entries");
    if (l < 1 || l > m + 1) throw DomainError("zstar_family: need 1 <= l <= m+1");
    require_distinct(lambda);
    CorrelatorFamily fam{lambda, {}, m, l};
    for (std::size_t i = 0; i <= m; ++i) {
        HbarSeries Z(order);
        QPoly num(Rational(1)), den(Rational(1));
        Z[0] = HbarRational(1);
        for (std::size_t d = 1; d <= order; ++d) {
            for (std::size_t r = l * (d - 1) + 1; r <= l * d; ++r)
                num *= QPoly({Rational(l) * lambda[i], Rational(static_cast<long>(r))});
            for (std::size_t a = 0; a <= m; ++a)
                den *= QPoly({lambda[i] - lambda[a], Rational(static_cast<long>(d))});
            Z[d] = HbarRational(num, den);
        }
        fam.entries.push_back(std::move(Z));
    }
    return fam;
}

inline CorrelatorFamily zstar_family(const HypergeomConfig& cfg, const LambdaTuple& lambda) {
    return zstar_family(cfg.m, cfg.l, cfg.order, lambda);
}

// D^m S - l q prod_{r=1}^{l-1}(l D + r) S with D = d/dt. For m = 4, l = 5
// this is the quintic Picard-Fuchs operator; for l < m and l = m it is the
// operator behind the quantum relations of cases (i) and (ii).
inline QMixedSeries hypergeometric_operator_residual(const QMixedSeries& S, unsigned m, unsigned l) {
    QMixedSeries lhs = S;
    for (unsigned k = 0; k < m; ++k) lhs = lhs.d_dt();
    QMixedSeries rhs = S;
    for (unsigned r = 1; r < l; ++r) rhs = rhs.d_dt() * Rational(l) + rhs * Rational(r);
    rhs = rhs.times_q() * Rational(l);
    return lhs - rhs;
}

// Same S*_X obtained from the equivariant series
// sum_d e^{(H/hbar+d)t} prod_{r=0}^{ld}(lH + r hbar) / prod_alpha prod_{r=1}^{d}(H - lambda_alpha + r hbar)
// at lambda = 0, hbar = 1, divided by lH. Uses h_cap + 1 H-powers internally.
inline QMixedSeries equivariant_route_SX(const HypergeomConfig& cfg) {
    cfg.validate();
    using HP = HTruncPoly<Rational>;
    const std::size_t N = cfg.h_cap + 1;
    const std::size_t D = cfg.order;
    QMixedSeries big(N, N - 1, D);
    for (std::size_t d = 0; d <= D; ++d) {
        HP num = HP::constant(N, Rational(1));
        for (std::size_t r = 0; r <= cfg.l * d; ++r)
            num *= HP::linear(N, Rational(static_cast<long>(r)), Rational(cfg.l));
        HP den = HP::constant(N, Rational(1));
        for (unsigned a = 0; a <= cfg.m; ++a)
            for (std::size_t r = 1; r <= d; ++r) den *= HP::linear(N, Rational(static_cast<long>(r)), Rational(1));
        const HP A = num * den.inverse();
        for (std::size_t h = 0; h < N; ++h)
            for (std::size_t k = 0; k <= h; ++k) big.at(h, k, d) = A[h - k] / Rational(factorial(k));
    }
    QMixedSeries out(cfg.h_cap, cfg.h_cap - 1, D);
    for (std::size_t h = 0; h < cfg.h_cap; ++h)
        for (std::size_t k = 0; k < cfg.h_cap; ++k)
            for (std::size_t d = 0; d <= D; ++d) {
                if (sgn(big.at(0, k, d)) != 0) throw ConsistencyError("equivariant series is not divisible by H");
                out.at(h, k, d) = big.at(h + 1, k, d) / Rational(cfg.l);
            }
    return out;
}

}  // namespace gwmirror
