#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/hbar_rational.hpp>
#include <gwmirror/hypergeom.hpp>
#include <gwmirror/lambda.hpp>
#include <gwmirror/rational.hpp>
#include <gwmirror/report.hpp>
#include <gwmirror/trunc_series.hpp>

namespace gwmirror {

// l < m, l = m, l = m + 1
enum class Regime { sub_m, equal_m, calabi_yau };

inline Regime regime_for(unsigned m, unsigned l) {
    if (l < 1 || l > m + 1) throw DomainError("need 1 <= l <= m+1");
    if (l < m) return Regime::sub_m;
    if (l == m) return Regime::equal_m;
    return Regime::calabi_yau;
}

inline std::string regime_name(Regime r) {
    switch (r) {
        case Regime::sub_m: return "sub_m";
        case Regime::equal_m: return "equal_m";
        case Regime::calabi_yau: return "calabi_yau";
    }
    return "?";
}

// Every value a correlator denominator or a recursion evaluation point can
// take: 0 and (lambda_a - lambda_b)/r for a != b, 1 <= r <= bound.
inline std::vector<Rational> pole_candidates(const LambdaTuple& lambda, std::size_t bound) {
    std::set<Rational> s{Rational(0)};
    for (std::size_t a = 0; a < lambda.size(); ++a)
        for (std::size_t b = 0; b < lambda.size(); ++b)
            if (a != b)
                for (std::size_t r = 1; r <= bound; ++r) s.insert((lambda[a] - lambda[b]) / Rational(static_cast<long>(r)));
    return {s.begin(), s.end()};
}

// C_i^j(d, hbar) for j != i, 1 <= d <= max_degree, plus the initial terms
// C_i(Q) of the l <= m recursions.
struct RecursionCoefficients {
    Regime regime = Regime::sub_m;
    unsigned m = 0;
    unsigned l = 0;
    LambdaTuple lambda;
    std::size_t max_degree = 0;
    std::vector<std::vector<std::vector<HbarRational>>> C;  // [i][j][d-1]; empty for j == i
    std::vector<QSeries> initial;                          // per i; zero for sub_m and calabi_yau

    const HbarRational& at(std::size_t i, std::size_t j, std::size_t d) const {
        if (i == j) throw DomainError("recursion coefficient needs j != i");
        if (d < 1 || d > max_degree) throw DomainError("recursion coefficient degree out of range");
        return C.at(i).at(j).at(d - 1);
    }
};

namespace detail {

inline Rational nonzero(const Rational& x, const char* what) {
    if (sgn(x) == 0) throw DomainError(std::string("lambda coincidence: zero ") + what);
    return x;
}

}  // namespace detail

// l <= m:
// C_i^j(d) = hbar/(lambda_i - lambda_j + d hbar)
//   * prod_{r=1}^{ld}(ld lambda_i/(lambda_j - lambda_i) + r)
//   / prod_alpha prod_{r=1..d, (alpha,r) != (j,d)}(d(lambda_i - lambda_alpha)/(lambda_j - lambda_i) + r)
inline HbarRational sub_cy_coefficient(unsigned m, unsigned l, const LambdaTuple& lambda, std::size_t i,
                                       std::size_t j, std::size_t d) {
    const Rational diff = detail::nonzero(lambda[j] - lambda[i], "lambda_j - lambda_i");
    const Rational dd(static_cast<long>(d));
    Rational K = 1;
    for (std::size_t r = 1; r <= l * d; ++r) K *= Rational(static_cast<long>(l * d)) * lambda[i] / diff + Rational(static_cast<long>(r));
    for (std::size_t a = 0; a <= m; ++a)
        for (std::size_t r = 1; r <= d; ++r) {
            if (a == j && r == d) continue;
            K /= detail::nonzero(dd * (lambda[i] - lambda[a]) / diff + Rational(static_cast<long>(r)),
                                 "recursion coefficient denominator");
        }
    return HbarRational(QPoly({Rational(0), K}), QPoly({lambda[i] - lambda[j], dd}));
}

// l = m + 1:
// C_i^j(d) = 1/(lambda_i - lambda_j + d hbar)
//   * prod_{r=1}^{(m+1)d}((m+1)lambda_i + r(lambda_j - lambda_i)/d)
//   / (d! prod_{alpha != i} prod_{r=1..d, (alpha,r) != (j,d)}(lambda_i - lambda_alpha + r(lambda_j - lambda_i)/d))
inline HbarRational cy_coefficient(unsigned m, const LambdaTuple& lambda, std::size_t i, std::size_t j,
                                   std::size_t d) {
    const Rational psi = detail::nonzero(lambda[j] - lambda[i], "lambda_j - lambda_i") / Rational(static_cast<long>(d));
    Rational K = 1;
    for (std::size_t r = 1; r <= (m + 1) * d; ++r) K *= Rational(m + 1) * lambda[i] + Rational(static_cast<long>(r)) * psi;
    K /= Rational(factorial(d));
    for (std::size_t a = 0; a <= m; ++a) {
        if (a == i) continue;
        for (std::size_t r = 1; r <= d; ++r) {
            if (a == j && r == d) continue;
            K /= detail::nonzero(lambda[i] - lambda[a] + Rational(static_cast<long>(r)) * psi,
                                 "recursion coefficient denominator");
        }
    }
    return HbarRational(QPoly(K), QPoly({lambda[i] - lambda[j], Rational(static_cast<long>(d))}));
}

// The same coefficient assembled from fixed-locus weights:
// (1/d) psi^d/(hbar - psi) * c_top(E') * e(phi_i) / c_top(N), with
// psi = (lambda_j - lambda_i)/d, c_top(E') = prod_{r=1}^{(m+1)d}((m+1)lambda_i + r psi),
// e(phi_i) = prod_{alpha != i}(lambda_i - lambda_alpha) and
// c_top(N) = prod_alpha prod_{r=0..d, (alpha,r) != (i,0),(j,d)}(lambda_i - lambda_alpha + r psi).
inline HbarRational cy_coefficient_from_weights(unsigned m, const LambdaTuple& lambda, std::size_t i, std::size_t j,
                                                std::size_t d) {
    const Rational dd(static_cast<long>(d));
    const Rational psi = detail::nonzero(lambda[j] - lambda[i], "lambda_j - lambda_i") / dd;
    Rational E = 1;
    for (std::size_t r = 1; r <= (m + 1) * d; ++r) E *= Rational(m + 1) * lambda[i] + Rational(static_cast<long>(r)) * psi;
    Rational phi = 1;
    for (std::size_t a = 0; a <= m; ++a)
        if (a != i) phi *= lambda[i] - lambda[a];
    Rational N = 1;
    for (std::size_t a = 0; a <= m; ++a)
        for (std::size_t r = 0; r <= d; ++r) {
            if ((a == i && r == 0) || (a == j && r == d)) continue;
            N *= detail::nonzero(lambda[i] - lambda[a] + Rational(static_cast<long>(r)) * psi, "normal weight");
        }
    const Rational K = pow(psi, static_cast<unsigned>(d)) * E * phi / (dd * N);
    return HbarRational(QPoly(K), QPoly({-psi, Rational(1)}));
}

// -1 + exp((-m! + (m lambda_i)^m / prod_{alpha != i}(lambda_i - lambda_alpha)) Q)
inline QSeries equal_m_initial_term(unsigned m, const LambdaTuple& lambda, std::size_t i, std::size_t order) {
    Rational prod = 1;
    for (std::size_t a = 0; a <= m; ++a)
        if (a != i) prod *= lambda[i] - lambda[a];
    const Rational kappa = -Rational(factorial(m)) + pow(Rational(m) * lambda[i], m) / detail::nonzero(prod, "lambda difference");
    QSeries e = series_exp(QSeries::monomial(order, 1, kappa));
    e[0] -= 1;
    return e;
}

inline RecursionCoefficients recursion_coeffs(Regime regime, unsigned m, unsigned l, const LambdaTuple& lambda,
                                              std::size_t max_degree) {
    if (regime_for(m, l) != regime) throw DomainError("regime " + regime_name(regime) + " does not match (m, l)");
    if (lambda.size() != m + 1) throw DomainError("lambda must have m+1 entries");
    require_distinct(lambda);
    RecursionCoefficients rc{regime, m, l, lambda, max_degree, {}, {}};
    rc.C.resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        rc.C[i].resize(m + 1);
        for (std::size_t j = 0; j <= m; ++j) {
            if (j == i) continue;
            for (std::size_t d = 1; d <= max_degree; ++d)
                rc.C[i][j].push_back(regime == Regime::calabi_yau ? cy_coefficient(m, lambda, i, j, d)
                                                                  : sub_cy_coefficient(m, l, lambda, i, j, d));
        }
        rc.initial.push_back(regime == Regime::equal_m ? equal_m_initial_term(m, lambda, i, max_degree)
                                                       : QSeries(max_degree));
    }
    return rc;
}

// z_i(Q) = Y_i(Q hbar^s): s = m+1-l for l <= m and s = 1 for l = m+1.
inline std::vector<HbarSeries> rescale_family(const CorrelatorFamily& Y) {
    const Regime regime = regime_for(Y.m, Y.l);
    const std::size_t s = regime == Regime::calabi_yau ? 1 : Y.m + 1 - Y.l;
    std::vector<HbarSeries> z;
    for (const auto& y : Y.entries) {
        HbarSeries r(y.order());
        for (std::size_t d = 0; d <= y.order(); ++d) r[d] = y[d] * HbarRational(QPoly::monomial(s * d));
        z.push_back(std::move(r));
    }
    return z;
}

// exp(-m! q/hbar) Y_i: after rescaling with Q = q/hbar this is the
// exp(-m! Q)-modified correlator of the l = m recursion.
inline CorrelatorFamily equal_m_modified_family(const CorrelatorFamily& Y) {
    if (Y.l != Y.m) throw DomainError("the exp(-m! q/hbar) modification is for l = m");
    const std::size_t D = Y.order();
    HbarSeries g(D);
    if (D >= 1) g[1] = HbarRational(QPoly(-Rational(factorial(Y.m))), QPoly::monomial(1));
    const HbarSeries e = series_exp(g);
    CorrelatorFamily out = Y;
    for (auto& y : out.entries) y = y * e;
    return out;
}

struct RecursionCheck {
    CheckResult result;
    // residual[i][n]: Q^n coefficient of z_i minus the recursion's right side
    // without the initial term. For l <= m it must vanish; for l = m+1 it is
    // the implied initial term I_in / n!.
    std::vector<std::vector<HbarRational>> residual;
    // l = m+1 only: I_in = n! residual[i][n] as hbar-polynomials.
    std::vector<std::vector<QPoly>> initial_data;
};

namespace detail {

// sum_{j != i} sum_{d=1}^{n} C_i^j(d) [z_j]_{n-d}((lambda_j - lambda_i)/d)
inline HbarRational recursion_sum(const RecursionCoefficients& rc, const std::vector<HbarSeries>& z, std::size_t i,
                                  std::size_t n, const std::vector<Rational>& candidates) {
    std::vector<HbarRational> terms;
    for (std::size_t j = 0; j <= rc.m; ++j) {
        if (j == i) continue;
        for (std::size_t d = 1; d <= n; ++d) {
            const Rational pt = (rc.lambda[j] - rc.lambda[i]) / Rational(static_cast<long>(d));
            terms.push_back(rc.at(i, j, d) * HbarRational(z[j][n - d].eval(pt)));
        }
    }
    return hbar_sum(terms, candidates);
}

}  // namespace detail

inline RecursionCheck verify_recursion(const CorrelatorFamily& Y, const RecursionCoefficients& rc, std::size_t order) {
    if (Y.size() != rc.m + 1 || Y.m != rc.m || Y.l != rc.l) throw DomainError("family does not match the coefficients");
    if (order > Y.order() || order > rc.max_degree) throw DomainError("verify_recursion: order exceeds the data");
    const bool cy = rc.regime == Regime::calabi_yau;
    const auto z = rescale_family(Y);
    const auto cand = pole_candidates(rc.lambda, order);

    RecursionCheck out;
    out.result.identity = "linear recursion (" + regime_name(rc.regime) + ", m=" + std::to_string(rc.m) +
                          ", l=" + std::to_string(rc.l) + ")";
    out.result.anchor = cy ? "z_i = sum_d I_id Q^d/d! + sum_{j,d} C_i^j(d) Q^d z_j(Q, (lambda_j-lambda_i)/d), "
                             "I_id an hbar-polynomial of degree <= d"
                           : "z_i = 1 + C_i(Q) + sum_{j,d} C_i^j(d) Q^d z_j(Q, (lambda_j-lambda_i)/d)";
    out.residual.assign(rc.m + 1, {});
    if (cy) out.initial_data.assign(rc.m + 1, {});
    for (std::size_t i = 0; i <= rc.m; ++i) {
        for (std::size_t n = 0; n <= order; ++n) {
            HbarRational r = z[i][n] - detail::recursion_sum(rc, z, i, n, cand);
            if (!cy) r -= HbarRational(n == 0 ? Rational(1) : rc.initial[i][n]);
            out.residual[i].push_back(r);
            std::string bad;
            if (!cy) {
                if (!r.is_zero()) bad = "residual " + r.str();
            } else {
                const HbarRational I = r * HbarRational(Rational(factorial(n)));
                if (!I.is_polynomial())
                    bad = "initial term is not an hbar-polynomial: " + I.str();
                else if (I.num().degree() > static_cast<int>(n))
                    bad = "initial term has hbar-degree " + std::to_string(I.num().degree()) + " > " + std::to_string(n);
                out.initial_data[i].push_back(I.is_polynomial() ? I.num() : QPoly());
            }
            if (!bad.empty() && out.result.passed) {
                out.result.passed = false;
                out.result.first_failure = "i=" + std::to_string(i) + ", Q^" + std::to_string(n) + ": " + bad;
            }
        }
    }
    return out;
}

// Solves the l = m+1 recursion for z order by order from initial data
// I[i][n] (n! times the Q^n initial term) and returns Y_i(q) = z_i(q/hbar).
inline CorrelatorFamily forward_solve_cy(const RecursionCoefficients& rc, const std::vector<std::vector<QPoly>>& I,
                                         std::size_t order) {
    if (rc.regime != Regime::calabi_yau) throw DomainError("forward_solve_cy needs the l = m+1 coefficients");
    if (order > rc.max_degree) throw DomainError("forward_solve_cy: order exceeds the coefficients");
    if (I.size() != rc.m + 1) throw DomainError("forward_solve_cy: initial data needs m+1 rows");
    for (const auto& row : I)
        if (row.size() < order + 1) throw DomainError("forward_solve_cy: initial data too short");
    const auto cand = pole_candidates(rc.lambda, order);
    std::vector<HbarSeries> z(rc.m + 1, HbarSeries(order));
    for (std::size_t n = 0; n <= order; ++n)
        for (std::size_t i = 0; i <= rc.m; ++i)
            z[i][n] = HbarRational(I[i][n] * QPoly(Rational(1) / Rational(factorial(n)))) +
                      detail::recursion_sum(rc, z, i, n, cand);
    CorrelatorFamily Y{rc.lambda, {}, rc.m, rc.l};
    for (auto& zi : z) {
        HbarSeries y(order);
        for (std::size_t d = 0; d <= order; ++d) y[d] = zi[d] / HbarRational(QPoly::monomial(d));
        Y.entries.push_back(std::move(y));
    }
    return Y;
}

}  // namespace gwmirror
