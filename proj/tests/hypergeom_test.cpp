#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <gwmirror/hypergeom.hpp>
#include <gwmirror/lambda.hpp>

using namespace gwmirror;

namespace {

Rational inv_factorial_power(std::size_t d, unsigned e) { return Rational(1) / pow(Rational(factorial(d)), e); }

QMixedSeries perturb(QMixedSeries S, std::size_t h, std::size_t t, std::size_t q) {
    S.at(h, t, q) += Rational(1, 1000);
    return S;
}

}  // namespace

TEST(FandG, KnownCoefficients) {
    auto [F, G5] = F_and_G(4, 5, 3);
    EXPECT_EQ(F[0], 1);
    EXPECT_EQ(F[1], 120);
    EXPECT_EQ(F[2], 113400);  // 10!/(2!)^5
    EXPECT_EQ(G5[0], 0);
    EXPECT_EQ(G5[1], 274);  // 120 (1 + 1/2 + 1/3 + 1/4 + 1/5)
    EXPECT_EQ(F_and_G(4, 1, 3).second[1], 120);
    EXPECT_THROW(F_and_G(4, 6, 3), DomainError);
}

TEST(HyperSeriesSX, QuinticLowOrder) {
    const QMixedSeries S = hyper_series_SX(HypergeomConfig::make(4, 5, 3));
    EXPECT_EQ(S.h_order(), 4U);
    EXPECT_EQ(S.at(0, 0, 0), 1);
    EXPECT_EQ(S.at(0, 0, 1), 120);
    // d = 0 term is e^{Ht}
    EXPECT_EQ(S.at(1, 1, 0), 1);
    EXPECT_EQ(S.at(3, 3, 0), frac(1, 6));
}

TEST(HyperSeriesSX, ComponentsMatchFAndG) {
    const std::size_t D = 7;
    const QMixedSeries S = hyper_series_SX(HypergeomConfig::make(4, 5, D));
    auto [F, G5] = F_and_G(4, 5, D);
    const QSeries G1 = F_and_G(4, 1, D).second;
    // I_0 = F, free of t
    EXPECT_EQ(S.series(0, 0), F);
    for (std::size_t k = 1; k <= S.t_cap(); ++k) EXPECT_EQ(S.series(0, k), QSeries(D));
    // I_1 / I_0 = t + 5 (G_5 - G_1)/F
    const QSeries Finv = series_inverse(F);
    EXPECT_EQ(S.series(1, 1) * Finv, QSeries::one(D));
    const QSeries shift = S.series(1, 0) * Finv;
    EXPECT_EQ(shift, series_div((G5 - G1) * Rational(5), F));
    EXPECT_EQ(shift[1], 770);
}

TEST(PicardFuchs, AnnihilatesAllComponentsThroughOrder8) {
    const QMixedSeries S = hyper_series_SX(HypergeomConfig::make(4, 5, 8));
    const QMixedSeries R = hypergeometric_operator_residual(S, 4, 5);
    EXPECT_TRUE(R.is_zero()) << R.first_nonzero()->str();
}

TEST(PicardFuchs, DetectsPerturbation) {
    const QMixedSeries S = hyper_series_SX(HypergeomConfig::make(4, 5, 5));
    for (std::size_t h = 0; h < 4; ++h)
        EXPECT_FALSE(hypergeometric_operator_residual(perturb(S, h, 0, 3), 4, 5).is_zero());
}

TEST(EquivariantRoute, AgreesWithDirectSeries) {
    for (auto [m, l] : std::vector<std::pair<unsigned, unsigned>>{{5, 3}, {4, 2}, {6, 5}, {4, 4}, {4, 5}}) {
        const auto cfg = HypergeomConfig::make(m, l, 4);
        EXPECT_EQ(equivariant_route_SX(cfg), hyper_series_SX(cfg)) << m << "," << l;
    }
}

TEST(HyperSeriesPm, OperatorAnnihilates) {
    for (unsigned m = 1; m <= 4; ++m) {
        const auto S = hyper_series_Pm(m, 4, (m + 1) * 4 + m);
        EXPECT_TRUE(quantum_de_residual_Pm(S, m).is_zero()) << "m=" << m;
    }
}

TEST(HyperSeriesPm, LineCaseDegreeOne) {
    // 1/(H + hbar)^2 = u^2 - 2 H u^3 with H^2 = 0, u = 1/hbar; times e^{(Hu + 1)t}
    const auto S = hyper_series_Pm(1, 1, 3);
    EXPECT_EQ(S.at(0, 0, 1), QPoly::monomial(2));
    EXPECT_EQ(S.at(1, 0, 1), QPoly::monomial(3, Rational(-2)));
    EXPECT_EQ(S.at(1, 1, 1), QPoly::monomial(3));
    // d = 0 term: e^{Ht/hbar}
    EXPECT_EQ(S.at(1, 1, 0), QPoly::monomial(1));
}

TEST(HyperSeriesPm, InsufficientDepthIsStructural) {
    EXPECT_THROW(hyper_series_Pm(4, 3, 16), StructuralError);
    EXPECT_NO_THROW(hyper_series_Pm(4, 3, 19));
}

TEST(Descendents, MatchInverseFactorialPowers) {
    EXPECT_EQ(descendent_value(4, 1), 1);
    EXPECT_EQ(descendent_value(4, 2), frac(1, 32));
    EXPECT_EQ(descendent_value(2, 2), frac(1, 8));
    for (unsigned m = 2; m <= 5; ++m)
        for (std::size_t d = 1; d <= 4; ++d) EXPECT_EQ(descendent_value(m, d), inv_factorial_power(d, m + 1));
    EXPECT_THROW(descendent_value(3, 0), DomainError);
}

TEST(ZStar, ConstantTermAndPointValue) {
    const LambdaTuple lambda{0, 1, 2, 3, 4};
    const auto Z = zstar_family(4, 5, 2, lambda);
    for (std::size_t i = 0; i <= 4; ++i) EXPECT_EQ(Z[i][0], HbarRational(1));
    // (10 20 30 40 50) / (10 9 8 7 6) = 12000000 / 30240
    EXPECT_EQ(Z[0][1].eval(10), frac(25000, 63));
    EXPECT_EQ(Z[0][1].eval(10), frac(10L * 20 * 30 * 40 * 50, 10L * 9 * 8 * 7 * 6));
}

TEST(ZStar, PolesOnlyAtExceptionalSet) {
    const LambdaTuple lambda = sample_lambda(4, 11, 8);
    const std::size_t D = 4;
    const auto Z = zstar_family(4, 5, D, lambda);
    for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t d = 1; d <= D; ++d) {
            // the alpha = i factors prod r hbar give the pole at 0
            std::vector<Rational> allowed{Rational(0)};
            for (std::size_t a = 0; a <= 4; ++a) {
                if (a == i) continue;
                for (std::size_t r = 1; r <= d; ++r) allowed.push_back((lambda[a] - lambda[i]) / Rational(static_cast<long>(r)));
            }
            const auto f = factor_over_roots(Z[i][d].den(), allowed);
            ASSERT_TRUE(f.has_value()) << "i=" << i << " d=" << d;
            // regular at the recursion points (lambda_i - lambda_j)/n
            for (std::size_t j = 0; j <= 4; ++j) {
                if (j == i) continue;
                for (std::size_t n = 1; n <= 8; ++n)
                    EXPECT_NO_THROW(Z[i][d].eval((lambda[i] - lambda[j]) / Rational(static_cast<long>(n))));
            }
        }
}

TEST(ZStar, RepeatedLambdaIsDomainError) {
    EXPECT_THROW(zstar_family(2, 3, 2, LambdaTuple{1, 2, 1}), DomainError);
    EXPECT_THROW(zstar_family(2, 3, 2, LambdaTuple{1, 2}), DomainError);
}

TEST(Lambda, SamplerIsDeterministicAndGeneric) {
    EXPECT_EQ(sample_lambda(4, 5), sample_lambda(4, 5));
    for (std::uint64_t s = 0; s < 20; ++s) EXPECT_TRUE(lambda_is_generic(sample_lambda(4, s, 6), 6));
    EXPECT_FALSE(lambda_is_generic(LambdaTuple{0, 1, 2, 3, 4}, 2));
}

TEST(HypergeomConfig, Validation) {
    EXPECT_THROW(HypergeomConfig::make(4, 6, 3).validate(), DomainError);
    EXPECT_THROW(HypergeomConfig::make(4, 5, 0).validate(), DomainError);
    EXPECT_THROW((HypergeomConfig{4, 5, 3, 7}.validate()), DomainError);
    EXPECT_NO_THROW((HypergeomConfig{4, 5, 3, 5}.validate()));
}
