#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/hypergeom.hpp>
#include <gwmirror/mixed_series.hpp>
#include <gwmirror/rational.hpp>
#include <gwmirror/report.hpp>
#include <gwmirror/trunc_series.hpp>

namespace gwmirror {

// Genus-0 invariants N_d and virtual counts n_d, d = 1..degree_max.
// N[d-1] and n[d-1] hold degree d.
struct InvariantTable {
    std::size_t degree_max = 0;
    std::vector<Rational> N;
    std::vector<Rational> n;

    std::vector<std::size_t> non_integral_degrees() const {
        std::vector<std::size_t> out;
        for (std::size_t d = 1; d <= n.size(); ++d)
            if (!is_integer(n[d - 1])) out.push_back(d);
        return out;
    }
    bool all_integral() const { return non_integral_degrees().empty(); }
};

// T = t + g(e^t), e^T = q exp(g(q)), and its inverse q = q' h(q').
struct MirrorMap {
    QSeries g;
    QSeries h;
};

namespace detail {

inline CheckResult zero_check(std::string identity, std::string anchor, const QMixedSeries& residual) {
    CheckResult c{std::move(identity), std::move(anchor), true, {}, {}};
    if (auto idx = residual.first_nonzero()) {
        c.passed = false;
        c.first_failure = idx->str() + ": residual " + to_string(residual.at(idx->h, idx->t, idx->q));
    }
    return c;
}

inline CheckResult equal_check(std::string identity, std::string anchor, const QMixedSeries& lhs,
                               const QMixedSeries& rhs) {
    return zero_check(std::move(identity), std::move(anchor), lhs - rhs);
}

}  // namespace detail

// (hbar d/dt)^m S = l e^t prod_{r=1}^{l-1}(l hbar d/dt + r hbar) S at hbar = 1,
// checked on an arbitrary series so that perturbed inputs can be fed in.
inline CheckResult check_case_i_identity(const QMixedSeries& S, unsigned m, unsigned l) {
    return detail::zero_check("case-i operator identity (m=" + std::to_string(m) + ", l=" + std::to_string(l) + ")",
                              "D^m S = l q prod_{r=1}^{l-1}(l D + r) S, D = d/dt, q = e^t; "
                              "quantum relation H^m = l^l q H^(l-1)",
                              hypergeometric_operator_residual(S, m, l));
}

inline CheckResult case_i_check(const HypergeomConfig& cfg) {
    cfg.validate();
    if (cfg.l >= cfg.m) throw DomainError("case (i) needs l < m");
    return check_case_i_identity(hyper_series_SX(cfg), cfg.m, cfg.l);
}

// (D + m! q)^m S - m q prod_{r=1}^{m-1}(m D + m m! q + r) S
inline QMixedSeries case_ii_residual(const QMixedSeries& S, unsigned m) {
    const Rational mf(factorial(m));
    QMixedSeries lhs = S;
    for (unsigned k = 0; k < m; ++k) lhs = lhs.d_dt() + lhs.times_q() * mf;
    QMixedSeries rhs = S;
    for (unsigned r = 1; r < m; ++r)
        rhs = rhs.d_dt() * Rational(m) + rhs.times_q() * (Rational(m) * mf) + rhs * Rational(r);
    rhs = rhs.times_q() * Rational(m);
    return lhs - rhs;
}

inline CheckResult check_case_ii_identity(const QMixedSeries& S, unsigned m) {
    return detail::zero_check("case-ii operator identity (m=l=" + std::to_string(m) + ")",
                              "(D + m! q)^m S = m q prod_{r=1}^{m-1}(m D + m m! q + r) S with S = exp(-m! q) S*; "
                              "quantum relation (H + m! q)^m = m^m q (H + m! q)^(m-1)",
                              case_ii_residual(S, m));
}

// exp(-m! e^t) S*_X together with the verification of its operator identity.
inline std::pair<QMixedSeries, CheckResult> case_ii_transform(const HypergeomConfig& cfg) {
    cfg.validate();
    if (cfg.l != cfg.m) throw DomainError("case (ii) needs l = m");
    QSeries exponent = QSeries::monomial(cfg.order, 1, -Rational(factorial(cfg.m)));
    QMixedSeries S = hyper_series_SX(cfg) * series_exp(exponent);
    CheckResult c = check_case_ii_identity(S, cfg.m);
    return {std::move(S), std::move(c)};
}

// g = (m+1)(G_{m+1} - G_1)/F, h = reversion of exp(g).
inline MirrorMap mirror_map_build(unsigned m, std::size_t order) {
    if (order < 1) throw DomainError("mirror_map_build: order must be >= 1");
    auto [F, Gtop] = F_and_G(m, m + 1, order);
    auto G1 = F_and_G(m, 1, order).second;
    QSeries g = series_div((Gtop - G1) * Rational(m + 1), F);
    QSeries h = series_reversion(series_exp(g));
    return {std::move(g), std::move(h)};
}

// N_d = sum_{k | d} n_{d/k} k^-3, solved for n in increasing d.
inline std::vector<Rational> multiple_cover_invert(const std::vector<Rational>& N) {
    std::vector<Rational> n(N.size());
    for (std::size_t d = 1; d <= N.size(); ++d) {
        Rational v = N[d - 1];
        for (std::size_t k = 2; k <= d; ++k)
            if (d % k == 0) v -= n[d / k - 1] / Rational(static_cast<long>(k * k * k));
        n[d - 1] = v;
    }
    return n;
}

inline std::vector<Rational> multiple_cover_sum(const std::vector<Rational>& n) {
    std::vector<Rational> N(n.size(), Rational(0));
    for (std::size_t e = 1; e <= n.size(); ++e)
        for (std::size_t k = 1; k * e <= n.size(); ++k)
            N[k * e - 1] += n[e - 1] / Rational(static_cast<long>(k * k * k));
    return N;
}

// J_b = I_b / I_0 for the quintic, as one mixed series in (H, t, q).
inline QMixedSeries quintic_J(std::size_t order) {
    QMixedSeries S = hyper_series_SX(HypergeomConfig::make(4, 5, order));
    for (std::size_t k = 1; k <= S.t_cap(); ++k)
        if (!(S.series(0, k) == QSeries(order)))
            throw ConsistencyError("I_0 depends on t");
    return S * series_inverse(S.series(0, 0));
}

// S_X in the mirror coordinates (T, q' = e^T): J after the change of
// variables t = T - g(q).
inline QMixedSeries quintic_transformed_SX(std::size_t order) {
    return mixed_substitute(quintic_J(order), mirror_map_build(4, order).g);
}

// Reads N_d off the H^2 component T^2/2 + (1/5) sum_d d N_d q'^d, then
// removes multiple covers.
inline InvariantTable quintic_invariants(std::size_t order) {
    InvariantTable table;
    table.degree_max = order;
    if (order == 0) return table;
    const QMixedSeries S = quintic_transformed_SX(order);
    for (std::size_t k = 1; k <= S.t_cap(); ++k)
        for (std::size_t d = 0; d <= order; ++d) {
            Rational expect = (k == 2 && d == 0) ? frac(1, 2) : Rational(0);
            if (S.at(2, k, d) != expect)
                throw ConsistencyError("H^2 component has unexpected term at " + MixedIndex{2, k, d}.str() + ": " +
                                       to_string(S.at(2, k, d)));
        }
    if (sgn(S.at(2, 0, 0)) != 0) throw ConsistencyError("H^2 component has a constant term");
    for (std::size_t d = 1; d <= order; ++d) table.N.push_back(S.at(2, 0, d) * 5 / Rational(static_cast<long>(d)));
    table.n = multiple_cover_invert(table.N);
    return table;
}

// F(T) = 5T^3/6 + sum_d N_d q'^d as a series in (T, q'), t-cap 3.
inline QMixedSeries prepotential(const std::vector<Rational>& N, std::size_t order) {
    QMixedSeries F(1, 3, order);
    F.at(0, 3, 0) = frac(5, 6);
    for (std::size_t d = 1; d <= order && d <= N.size(); ++d) F.at(0, 0, d) = N[d - 1];
    return F;
}

// Checks, through q-order `order`:
//  * F(T(t)) = (5/2)(J_1 J_2 - J_3) with T = I_1/I_0(t);
//  * the transformed S_X has H^0 = 1, H^1 = T, H^2 = F'/5, H^3 = T F'/5 - 2F/5.
// The table supplies N_d (defaults to quintic_invariants(order)).
inline Report mirror_identity_check(std::size_t order, const std::optional<InvariantTable>& table_in = std::nullopt) {
    Report rep;
    const InvariantTable table = table_in ? *table_in : quintic_invariants(order);
    if (table.N.size() < order) throw DomainError("mirror_identity_check: invariant table shorter than order");
    const QMixedSeries J = quintic_J(order);
    const MirrorMap mm = mirror_map_build(4, order);

    // T(t) = t + g(q)
    QMixedSeries T(1, 3, order);
    T.at(0, 1, 0) = 1;
    for (std::size_t d = 1; d <= order; ++d) T.at(0, 0, d) = mm.g[d];
    QMixedSeries lhs = T * T * T * frac(5, 6);
    for (std::size_t d = 1; d <= order; ++d) {
        QSeries e = series_exp(mm.g * Rational(static_cast<long>(d))).shift(d) * table.N[d - 1];
        lhs = lhs + QMixedSeries::from_series(e, 1, 3);
    }
    QMixedSeries rhs = (J.component(1) * J.component(2) - J.component(3)) * frac(5, 2);
    rep.add(detail::equal_check("prepotential in mirror coordinates", "F(T(t)) = (5/2)(I_1 I_2 / I_0^2 - I_3 / I_0)",
                                lhs, rhs));

    const QMixedSeries S = mixed_substitute(J, mm.g);
    const QMixedSeries F = prepotential(table.N, order);
    const QMixedSeries dF = F.d_dt();  // d/dT with q' = e^T
    QMixedSeries Tp(1, 3, order);
    Tp.at(0, 1, 0) = 1;
    QMixedSeries one(1, 3, order);
    one.at(0, 0, 0) = 1;
    rep.add(detail::equal_check("S_X H^0 component", "S_X = 1 + T H + ...", S.component(0), one));
    rep.add(detail::equal_check("S_X H^1 component", "S_X = 1 + T H + ...", S.component(1), Tp));
    rep.add(detail::equal_check("S_X H^2 component", "H^2 coefficient of S_X = (1/5) dF/dT", S.component(2),
                                dF * frac(1, 5)));
    rep.add(detail::equal_check("S_X H^3 component", "H^3 coefficient of S_X = (1/5) T dF/dT - (2/5) F",
                                S.component(3), Tp * dF * frac(1, 5) - F * frac(2, 5)));
    return rep;
}

}  // namespace gwmirror
