#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/hbar_rational.hpp>
#include <gwmirror/hypergeom.hpp>
#include <gwmirror/parallel.hpp>
#include <gwmirror/rational.hpp>
#include <gwmirror/recursion.hpp>
#include <gwmirror/report.hpp>
#include <gwmirror/trunc_series.hpp>

namespace gwmirror {

// Polynomial in P with hbar-polynomial coefficients: coeffs[k] multiplies P^k.
struct PHbarPoly {
    std::vector<QPoly> coeffs;

    int degree_P() const {
        for (std::size_t k = coeffs.size(); k-- > 0;)
            if (!coeffs[k].is_zero()) return static_cast<int>(k);
        return -1;
    }
    Rational eval(const Rational& P, const Rational& hbar) const {
        Rational acc = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * P + coeffs[k].eval(hbar);
        return acc;
    }
    friend bool operator==(const PHbarPoly& a, const PHbarPoly& b) {
        const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
        for (std::size_t k = 0; k < n; ++k) {
            const QPoly x = k < a.coeffs.size() ? a.coeffs[k] : QPoly();
            const QPoly y = k < b.coeffs.size() ? b.coeffs[k] : QPoly();
            if (!(x == y)) return false;
        }
        return true;
    }
};

struct ClassPData {
    unsigned m = 0;
    std::vector<std::vector<QPoly>> N;  // N[i][d]
    std::vector<PHbarPoly> E;           // E[d]
};

// prod_{r=0}^{(m+1)d}((m+1)P - r hbar)
inline PHbarPoly zstar_E_closed_form(unsigned m, std::size_t d) {
    std::vector<QPoly> c{QPoly(Rational(1))};
    for (std::size_t r = 0; r <= (m + 1) * d; ++r) {
        // multiply by (m+1) P - r hbar
        std::vector<QPoly> next(c.size() + 1);
        const QPoly shift({Rational(0), -Rational(static_cast<long>(r))});
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k] * QPoly(Rational(m + 1));
            next[k] += c[k] * shift;
        }
        c = std::move(next);
    }
    return {std::move(c)};
}

namespace detail {

// N_id = hbar^d Y_id d! prod_{j != i} prod_{r=1}^{d}(lambda_i - lambda_j + r hbar)
inline QPoly extract_N(const CorrelatorFamily& Y, std::size_t i, std::size_t d) {
    QPoly mult = QPoly::monomial(d, Rational(factorial(d)));
    for (std::size_t j = 0; j <= Y.m; ++j)
        if (j != i)
            for (std::size_t r = 1; r <= d; ++r)
                mult *= QPoly({Y.lambda[i] - Y.lambda[j], Rational(static_cast<long>(r))});
    const HbarRational v = Y[i][d] * HbarRational(mult);
    const std::string where = "N_{" + std::to_string(i) + "," + std::to_string(d) + "}";
    if (!v.is_polynomial()) throw ClassPViolation(where + " is not an hbar-polynomial: " + v.str());
    if (v.num().degree() > static_cast<int>((Y.m + 1) * d))
        throw ClassPViolation(where + " has hbar-degree " + std::to_string(v.num().degree()) + " > (m+1)d");
    return v.num();
}

// Lagrange interpolation in P through P = lambda_i + r hbar, r = 0..d, with
// values (m+1) lambda_i N_ir(hbar) N_i(d-r)(-hbar).
inline PHbarPoly interpolate_E(const CorrelatorFamily& Y, const std::vector<std::vector<QPoly>>& N, std::size_t d) {
    struct Node {
        std::size_t i, r;
        QPoly value;
    };
    std::vector<Node> nodes;
    for (std::size_t i = 0; i <= Y.m; ++i)
        for (std::size_t r = 0; r <= d; ++r)
            nodes.push_back({i, r, N[i][r] * N[i][d - r].reflect() * QPoly(Rational(Y.m + 1) * Y.lambda[i])});
    const std::size_t n = nodes.size();

    std::vector<RootFactored> dens(n);
    std::vector<std::vector<QPoly>> basis(n);  // prod_{b != a}(P - x_b), coefficients in P
    for (std::size_t a = 0; a < n; ++a) {
        const Node& A = nodes[a];
        std::vector<QPoly> L{QPoly(Rational(1))};
        for (std::size_t b = 0; b < n; ++b) {
            if (b == a) continue;
            const Node& B = nodes[b];
            // x_a - x_b = (lambda_ia - lambda_ib) + (r_a - r_b) hbar
            const Rational c0 = Y.lambda[A.i] - Y.lambda[B.i];
            const Rational c1 = Rational(static_cast<long>(A.r)) - Rational(static_cast<long>(B.r));
            if (sgn(c1) == 0) {
                if (sgn(c0) == 0) throw DegenerateLambdaError("interpolation nodes coincide");
                dens[a].unit *= c0;
            } else {
                dens[a].unit *= c1;
                ++dens[a].roots[-c0 / c1];
            }
            const QPoly xb({-Y.lambda[B.i], -Rational(static_cast<long>(B.r))});  // -x_b
            std::vector<QPoly> next(L.size() + 1);
            for (std::size_t k = 0; k < L.size(); ++k) {
                next[k + 1] += L[k];
                next[k] += L[k] * xb;
            }
            L = std::move(next);
        }
        basis[a] = std::move(L);
    }
    const CommonDenominator cd = common_denominator(dens);
    std::vector<QPoly> lifted(n);
    for (std::size_t a = 0; a < n; ++a) lifted[a] = nodes[a].value * cd.cofactor[a];

    PHbarPoly E;
    for (std::size_t k = 0; k < n; ++k) {
        QPoly total;
        for (std::size_t a = 0; a < n; ++a) total += basis[a][k] * lifted[a];
        const HbarRational c = reduce_over_roots(std::move(total), cd.lcm);
        if (!c.is_polynomial())
            throw ClassPViolation("E_" + std::to_string(d) + " coefficient of P^" + std::to_string(k) +
                                  " is not an hbar-polynomial: " + c.str());
        E.coeffs.push_back(c.num());
    }
    return E;
}

}  // namespace detail

inline ClassPData classP_extract(const CorrelatorFamily& Y, std::size_t order, unsigned threads = 1) {
    if (order > Y.order()) throw DomainError("classP_extract: order exceeds the family");
    require_distinct(Y.lambda);
    ClassPData out{Y.m, {}, {}};
    out.N.assign(Y.m + 1, {});
    for (std::size_t i = 0; i <= Y.m; ++i)
        for (std::size_t d = 0; d <= order; ++d) out.N[i].push_back(detail::extract_N(Y, i, d));
    out.E.resize(order + 1);
    parallel_for(order + 1, threads, [&](std::size_t d) { out.E[d] = detail::interpolate_E(Y, out.N, d); });
    return out;
}

// Coefficients c[k][n] of z^k q^n, k <= kz, n <= qd.
template <typename R>
class ZQSeries {
public:
    ZQSeries() = default;
    ZQSeries(std::size_t kz, std::size_t qd) : kz_(kz), qd_(qd), c_((kz + 1) * (qd + 1), R(0)) {}

    std::size_t z_order() const { return kz_; }
    std::size_t q_order() const { return qd_; }
    R& at(std::size_t k, std::size_t n) { return c_.at(k * (qd_ + 1) + n); }
    const R& at(std::size_t k, std::size_t n) const { return c_.at(k * (qd_ + 1) + n); }

    friend ZQSeries operator+(ZQSeries a, const ZQSeries& b) {
        a.check(b);
        for (std::size_t x = 0; x < a.c_.size(); ++x) a.c_[x] = a.c_[x] + b.c_[x];
        return a;
    }
    friend ZQSeries operator-(ZQSeries a, const ZQSeries& b) {
        a.check(b);
        for (std::size_t x = 0; x < a.c_.size(); ++x) a.c_[x] = a.c_[x] - b.c_[x];
        return a;
    }
    friend ZQSeries operator*(const ZQSeries& a, const ZQSeries& b) {
        using gwmirror::is_zero;
        a.check(b);
        ZQSeries r(a.kz_, a.qd_);
        for (std::size_t k1 = 0; k1 <= a.kz_; ++k1)
            for (std::size_t n1 = 0; n1 <= a.qd_; ++n1) {
                const R& x = a.at(k1, n1);
                if (is_zero(x)) continue;
                for (std::size_t k2 = 0; k1 + k2 <= a.kz_; ++k2)
                    for (std::size_t n2 = 0; n1 + n2 <= a.qd_; ++n2) {
                        const R& y = b.at(k2, n2);
                        if (!is_zero(y)) r.at(k1 + k2, n1 + n2) = r.at(k1 + k2, n1 + n2) + x * y;
                    }
            }
        return r;
    }
    friend ZQSeries operator*(ZQSeries a, const R& s) {
        for (auto& x : a.c_) x = x * s;
        return a;
    }
    friend bool operator==(const ZQSeries& a, const ZQSeries& b) {
        return a.kz_ == b.kz_ && a.qd_ == b.qd_ && a.c_ == b.c_;
    }

private:
    void check(const ZQSeries& o) const {
        if (kz_ != o.kz_ || qd_ != o.qd_) throw StructuralError("ZQSeries: truncation mismatch");
    }
    std::size_t kz_ = 0;
    std::size_t qd_ = 0;
    std::vector<R> c_;
};

using PhiSeries = ZQSeries<HbarRational>;

// Phi^Y(z, q) = sum_i w_i e^{lambda_i z} Y_i(q e^{z hbar}, hbar) Y_i(q, -hbar),
// w_i = (m+1) lambda_i / prod_{j != i}(lambda_i - lambda_j). The z^k q^n
// coefficient is sum_i w_i sum_{d+e=n} (lambda_i + d hbar)^k/k! Y_id(hbar) Y_ie(-hbar).
inline PhiSeries phi_double_correlator(const CorrelatorFamily& Y, std::size_t kz, std::size_t qd,
                                       unsigned threads = 1) {
    if (qd > Y.order()) throw DomainError("phi_double_correlator: q-order exceeds the family");
    require_distinct(Y.lambda);
    const std::size_t M = Y.size();
    std::vector<Rational> w(M);
    for (std::size_t i = 0; i < M; ++i) {
        Rational p = 1;
        for (std::size_t j = 0; j < M; ++j)
            if (j != i) p *= Y.lambda[i] - Y.lambda[j];
        w[i] = Rational(static_cast<long>(M)) * Y.lambda[i] / p;
    }
    const auto cand = pole_candidates(Y.lambda, qd);
    PhiSeries phi(kz, qd);
    parallel_for(qd + 1, threads, [&](std::size_t n) {
        struct Term {
            QPoly linear;  // lambda_i + d hbar
            HbarRational value;
        };
        std::vector<Term> terms;
        for (std::size_t i = 0; i < M; ++i)
            for (std::size_t d = 0; d <= n; ++d)
                terms.push_back({QPoly({Y.lambda[i], Rational(static_cast<long>(d))}),
                                 Y[i][d] * Y[i][n - d].reflect() * HbarRational(w[i])});
        std::vector<FactoredRational> split;
        for (const auto& t : terms) {
            auto f = factor_rational(t.value, cand);
            if (!f) break;
            split.push_back(std::move(*f));
        }
        std::vector<QPoly> power(terms.size(), QPoly(Rational(1)));
        if (split.size() == terms.size()) {
            std::vector<RootFactored> dens;
            for (const auto& s : split) dens.push_back(s.den);
            const CommonDenominator cd = common_denominator(dens);
            std::vector<QPoly> lifted;
            for (std::size_t t = 0; t < terms.size(); ++t) lifted.push_back(split[t].num * cd.cofactor[t]);
            for (std::size_t k = 0; k <= kz; ++k) {
                QPoly total;
                for (std::size_t t = 0; t < terms.size(); ++t) total += power[t] * lifted[t];
                phi.at(k, n) = reduce_over_roots(std::move(total), cd.lcm);
                for (std::size_t t = 0; t < terms.size(); ++t)
                    power[t] = power[t] * terms[t].linear * QPoly(Rational(1) / Rational(static_cast<long>(k + 1)));
            }
        } else {
            for (std::size_t k = 0; k <= kz; ++k) {
                HbarRational total;
                for (std::size_t t = 0; t < terms.size(); ++t) total += HbarRational(power[t]) * terms[t].value;
                phi.at(k, n) = total;
                for (std::size_t t = 0; t < terms.size(); ++t)
                    power[t] = power[t] * terms[t].linear * QPoly(Rational(1) / Rational(static_cast<long>(k + 1)));
            }
        }
    });
    return phi;
}

inline CheckResult check_phi_polynomial(const PhiSeries& phi) {
    CheckResult c{"double correlator polynomiality", "Phi^Y(z, q) has hbar-polynomial coefficients", true, {}, {}};
    for (std::size_t n = 0; n <= phi.q_order() && c.passed; ++n)
        for (std::size_t k = 0; k <= phi.z_order(); ++k)
            if (!phi.at(k, n).is_polynomial()) {
                c.passed = false;
                c.first_failure = "z^" + std::to_string(k) + " q^" + std::to_string(n) + ": " + phi.at(k, n).str();
                break;
            }
    return c;
}

// Poles of Y_id may only lie at hbar = (lambda_alpha - lambda_i)/r, r <= d
// (and 0 after transformations); in particular no pole at
// hbar = (lambda_i - lambda_j)/n, j != i, 1 <= n <= n_bound.
inline CheckResult check_regularity(const CorrelatorFamily& Y, std::size_t n_bound) {
    CheckResult c{"correlator regularity", "Y_i regular at hbar = (lambda_i - lambda_j)/n, j != i", true, {}, {}};
    for (std::size_t i = 0; i < Y.size() && c.passed; ++i)
        for (std::size_t d = 1; d <= Y.order() && c.passed; ++d)
            for (std::size_t j = 0; j < Y.size() && c.passed; ++j) {
                if (j == i) continue;
                for (std::size_t n = 1; n <= n_bound; ++n) {
                    const Rational pt = (Y.lambda[i] - Y.lambda[j]) / Rational(static_cast<long>(n));
                    if (Y[i][d].den().eval(pt) == 0) {
                        c.passed = false;
                        c.first_failure = "i=" + std::to_string(i) + ", q^" + std::to_string(d) + ": pole at hbar=" +
                                          to_string(pt);
                        break;
                    }
                }
            }
    return c;
}

enum class TransformKind { a, b, c };

namespace detail {

// exp(s g(q)/hbar) as a q-series with hbar-rational coefficients.
inline HbarSeries exp_over_hbar(const QSeries& g, const Rational& s) {
    const QPoly h = QPoly::monomial(1);
    return series_exp(g.map([&](const Rational& x) { return HbarRational(QPoly(s * x), h); }));
}

// Y(u(q)) for a rational series u with u(0) = 0.
inline HbarSeries compose_rational(const HbarSeries& Y, const QSeries& u, const std::vector<Rational>& cand) {
    const std::size_t D = Y.order();
    std::vector<QSeries> powers{QSeries::one(D)};
    for (std::size_t d = 1; d <= D; ++d) powers.push_back(powers.back() * u);
    HbarSeries out(D);
    for (std::size_t n = 0; n <= D; ++n) {
        std::vector<HbarRational> terms;
        for (std::size_t d = 0; d <= n; ++d)
            if (sgn(powers[d][n]) != 0) terms.push_back(Y[d] * HbarRational(powers[d][n]));
        out[n] = hbar_sum(terms, cand);
    }
    return out;
}

}  // namespace detail

// (a) f(q) Y_i; (b) exp(lambda_i g/hbar) Y_i(q e^g); (c) exp(C g/hbar) Y_i
// with C = sum_alpha c_alpha lambda_alpha.
inline CorrelatorFamily transform_family(const CorrelatorFamily& Y, TransformKind kind, const QSeries& fg,
                                         const std::optional<std::vector<Rational>>& c_weights = std::nullopt) {
    const std::size_t D = Y.order();
    if (fg.order() != D) throw StructuralError("transform_family: series order differs from the family");
    CorrelatorFamily out = Y;
    switch (kind) {
        case TransformKind::a: {
            if (fg[0] != 1) throw DomainError("transformation (a) needs f(0) = 1");
            const HbarSeries f = fg.map([](const Rational& x) { return HbarRational(x); });
            for (auto& y : out.entries) y = y * f;
            break;
        }
        case TransformKind::b: {
            if (sgn(fg[0]) != 0) throw DomainError("transformation (b) needs g(0) = 0");
            const QSeries u = series_exp(fg).shift(1);  // q e^{g(q)}
            const auto cand = pole_candidates(Y.lambda, D);
            for (std::size_t i = 0; i < out.size(); ++i)
                out.entries[i] = detail::exp_over_hbar(fg, Y.lambda[i]) * detail::compose_rational(Y[i], u, cand);
            break;
        }
        case TransformKind::c: {
            if (sgn(fg[0]) != 0) throw DomainError("transformation (c) needs g(0) = 0");
            if (!c_weights || c_weights->size() != Y.size())
                throw DomainError("transformation (c) needs one weight per lambda");
            Rational C = 0;
            for (std::size_t a = 0; a < Y.size(); ++a) C += (*c_weights)[a] * Y.lambda[a];
            const HbarSeries e = detail::exp_over_hbar(fg, C);
            for (auto& y : out.entries) y = y * e;
            break;
        }
    }
    return out;
}

namespace detail {

// f(q e^{z hbar}) = sum f_d (d hbar)^k/k! z^k q^d
inline PhiSeries shifted_series(const QSeries& f, std::size_t kz, std::size_t qd) {
    PhiSeries r(kz, qd);
    for (std::size_t d = 0; d <= qd; ++d)
        for (std::size_t k = 0; k <= kz; ++k)
            r.at(k, d) = HbarRational(QPoly::monomial(k, f[d] * pow(Rational(static_cast<long>(d)), static_cast<unsigned>(k)) /
                                                               Rational(factorial(k))));
    return r;
}

inline PhiSeries q_only(const QSeries& f, std::size_t kz, std::size_t qd) {
    PhiSeries r(kz, qd);
    for (std::size_t d = 0; d <= qd; ++d) r.at(0, d) = HbarRational(f[d]);
    return r;
}

// (g(q e^{z hbar}) - g(q))/hbar = sum_{k >= 1} g_d d^k hbar^{k-1} z^k q^d / k!
inline PhiSeries delta_series(const QSeries& g, std::size_t kz, std::size_t qd) {
    PhiSeries r(kz, qd);
    for (std::size_t d = 1; d <= qd; ++d)
        for (std::size_t k = 1; k <= kz; ++k)
            r.at(k, d) = HbarRational(QPoly::monomial(
                k - 1, g[d] * pow(Rational(static_cast<long>(d)), static_cast<unsigned>(k)) / Rational(factorial(k))));
    return r;
}

inline PhiSeries zq_exp(const PhiSeries& x) {
    // x has no z^0 terms, so x^j vanishes for j > z_order
    PhiSeries acc(x.z_order(), x.q_order());
    PhiSeries term(x.z_order(), x.q_order());
    term.at(0, 0) = HbarRational(1);
    for (std::size_t j = 0; j <= x.z_order(); ++j) {
        acc = acc + term;
        term = term * x * HbarRational(frac(1, static_cast<long>(j + 1)));
    }
    return acc;
}

}  // namespace detail

// Phi^{fY} = f(q e^{z hbar}) f(q) Phi^Y
inline PhiSeries phi_law_a(const PhiSeries& phi, const QSeries& f) {
    const std::size_t kz = phi.z_order(), qd = phi.q_order();
    return detail::shifted_series(f.truncate(qd), kz, qd) * detail::q_only(f.truncate(qd), kz, qd) * phi;
}

// Phi^{(b)Y}(z, q) = Phi^Y(z + (g(q e^{z hbar}) - g(q))/hbar, q e^{g(q)})
inline PhiSeries phi_law_b(const PhiSeries& phi, const QSeries& g) {
    const std::size_t kz = phi.z_order(), qd = phi.q_order();
    const QSeries gt = g.truncate(qd);
    PhiSeries zt = detail::delta_series(gt, kz, qd);
    if (kz >= 1) zt.at(1, 0) = zt.at(1, 0) + HbarRational(1);
    const PhiSeries qt = detail::q_only(series_exp(gt).shift(1), kz, qd);
    std::vector<PhiSeries> zpow{detail::q_only(QSeries::one(qd), kz, qd)};
    for (std::size_t k = 1; k <= kz; ++k) zpow.push_back(zpow.back() * zt);
    std::vector<PhiSeries> qpow{zpow.front()};
    for (std::size_t n = 1; n <= qd; ++n) qpow.push_back(qpow.back() * qt);
    PhiSeries out(kz, qd);
    for (std::size_t k = 0; k <= kz; ++k)
        for (std::size_t n = 0; n <= qd; ++n)
            if (!phi.at(k, n).is_zero()) out = out + zpow[k] * qpow[n] * phi.at(k, n);
    return out;
}

// Phi^{(c)Y} = exp(C (g(q e^{z hbar}) - g(q))/hbar) Phi^Y
inline PhiSeries phi_law_c(const PhiSeries& phi, const QSeries& g, const Rational& C) {
    const std::size_t kz = phi.z_order(), qd = phi.q_order();
    return detail::zq_exp(detail::delta_series(g.truncate(qd), kz, qd) * HbarRational(C)) * phi;
}

// (hbar^0, hbar^-1) Laurent coefficients of every Y_i at hbar = infinity.
inline std::vector<std::pair<QSeries, QSeries>> mod_hbar2_expansion(const CorrelatorFamily& Y) {
    std::vector<std::pair<QSeries, QSeries>> out;
    for (const auto& y : Y.entries) {
        QSeries c0(y.order()), c1(y.order());
        for (std::size_t d = 0; d <= y.order(); ++d) {
            const auto e = y[d].laurent_expand(1);
            c0[d] = e[0];
            c1[d] = e[1];
        }
        out.emplace_back(std::move(c0), std::move(c1));
    }
    return out;
}

// Undoes Zbar_i = F exp((lambda_i (m+1)(G_{m+1} - G_1) + G_1 sum lambda)/(hbar F)) Z_i(q e^g)
// on a Z* family: (a) with 1/F, then (c) with -G_1/F and C = sum lambda, then
// (b) with the inverse q-shift log(w), w the reversion of exp(g).
inline CorrelatorFamily inverse_composite(const CorrelatorFamily& Zs) {
    const unsigned m = Zs.m;
    const std::size_t D = Zs.order();
    if (Zs.l != m + 1) throw DomainError("the composite transformation is for l = m+1");
    auto [F, Gtop] = F_and_G(m, m + 1, D);
    const QSeries G1 = F_and_G(m, 1, D).second;
    const QSeries g = series_div((Gtop - G1) * Rational(m + 1), F);
    const QSeries ginv = series_log(series_reversion(series_exp(g)));
    CorrelatorFamily Y = transform_family(Zs, TransformKind::a, series_inverse(F));
    Y = transform_family(Y, TransformKind::c, -series_div(G1, F), std::vector<Rational>(m + 1, Rational(1)));
    return transform_family(Y, TransformKind::b, ginv);
}

inline CheckResult check_trivial_mod_hbar2(const CorrelatorFamily& Y) {
    CheckResult c{"family trivial modulo hbar^-2", "Y_i = 1 modulo hbar^-2", true, {}, {}};
    const auto ex = mod_hbar2_expansion(Y);
    for (std::size_t i = 0; i < ex.size() && c.passed; ++i)
        for (std::size_t d = 0; d <= Y.order(); ++d) {
            const Rational want0 = d == 0 ? Rational(1) : Rational(0);
            if (ex[i].first[d] != want0 || sgn(ex[i].second[d]) != 0) {
                c.passed = false;
                c.first_failure = "i=" + std::to_string(i) + ", q^" + std::to_string(d) + ": (" +
                                  to_string(ex[i].first[d]) + ", " + to_string(ex[i].second[d]) + ")";
                break;
            }
        }
    return c;
}

// Y_id = (I^0_id + I^1_id/hbar)/d! modulo hbar^-2, where I^j_id is the
// hbar^{d-j} coefficient of the extracted initial term I_id.
inline CheckResult check_two_coefficient(const CorrelatorFamily& Y, const std::vector<std::vector<QPoly>>& I) {
    CheckResult c{"two-coefficient determinacy", "Y_i = sum_d q^d (I^0_id + I^1_id/hbar)/d! modulo hbar^-2", true, {}, {}};
    const auto ex = mod_hbar2_expansion(Y);
    for (std::size_t i = 0; i < ex.size() && c.passed; ++i)
        for (std::size_t d = 0; d < I.at(i).size() && d <= Y.order(); ++d) {
            const Rational f(factorial(d));
            const Rational want0 = I[i][d].coeff(d) / f;
            const Rational want1 = d >= 1 ? I[i][d].coeff(d - 1) / f : Rational(0);
            if (ex[i].first[d] != want0 || ex[i].second[d] != want1) {
                c.passed = false;
                c.first_failure = "i=" + std::to_string(i) + ", q^" + std::to_string(d);
                break;
            }
        }
    return c;
}

// Conditions I-III of class P for an l = m+1 family through `order`.
inline Report class_p_report(const CorrelatorFamily& Y, std::size_t order, std::size_t kz, unsigned threads = 1) {
    Report rep;
    rep.add(check_regularity(Y, order));
    const auto rc = recursion_coeffs(Regime::calabi_yau, Y.m, Y.l, Y.lambda, order);
    rep.add(verify_recursion(Y, rc, order).result);
    rep.add(check_phi_polynomial(phi_double_correlator(Y, kz, order, threads)));
    return rep;
}

}  // namespace gwmirror
