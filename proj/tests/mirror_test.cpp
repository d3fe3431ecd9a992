#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include <gwmirror/mirror.hpp>

using namespace gwmirror;

TEST(MirrorMap, LeadingCoefficientsAndRoundTrip) {
    const std::size_t D = 8;
    const MirrorMap mm = mirror_map_build(4, D);
    EXPECT_EQ(mm.g[0], 0);
    EXPECT_EQ(mm.g[1], 770);
    EXPECT_EQ(mm.h[0], 1);
    EXPECT_EQ(mm.h[1], -770);
    // q' h(q') exp(g(q' h(q'))) = q'
    const QSeries q_of = mm.h.shift(1);
    EXPECT_EQ(q_of * series_exp(series_compose(mm.g, q_of)), QSeries::monomial(D, 1));
}

TEST(Invariants, QuinticVirtualCounts) {
    const InvariantTable t = quintic_invariants(4);
    ASSERT_EQ(t.n.size(), 4U);
    EXPECT_EQ(t.n[0], 2875);
    EXPECT_EQ(t.n[1], 609250);
    EXPECT_EQ(t.n[2], 317206375);
    EXPECT_EQ(t.n[3], Rational(Integer("242467530000")));
    EXPECT_EQ(t.N[0], 2875);
    EXPECT_EQ(t.N[1], frac(4876875, 8));
}

TEST(Invariants, IntegralAndConsistentThroughOrder10) {
    const InvariantTable t = quintic_invariants(10);
    EXPECT_TRUE(t.all_integral());
    EXPECT_EQ(multiple_cover_sum(t.n), t.N);
    EXPECT_EQ(t.n[4], Rational(Integer("229305888887625")));
}

TEST(Invariants, EmptyTable) {
    const InvariantTable t = quintic_invariants(0);
    EXPECT_TRUE(t.N.empty());
    EXPECT_TRUE(t.n.empty());
}

TEST(MultipleCover, Examples) {
    // N_2 = n_2 + n_1/8
    EXPECT_EQ(multiple_cover_sum({2875, 609250})[1], frac(4876875, 8));
    // N_4 = n_4 + n_2/8 + n_1/64
    const auto N = multiple_cover_sum({1, 0, 0, 1});
    EXPECT_EQ(N[3], 1 + frac(1, 64));
    EXPECT_EQ(multiple_cover_invert({1, frac(1, 8), frac(1, 27), frac(1, 64)}), (std::vector<Rational>{1, 0, 0, 0}));
}

TEST(MultipleCover, RoundTrip) {
    std::vector<Rational> n;
    for (long d = 1; d <= 10; ++d) n.push_back(frac(d * d - 7, d + 2));
    EXPECT_EQ(multiple_cover_invert(multiple_cover_sum(n)), n);
}

TEST(MirrorIdentity, AllComponentsHold) {
    const Report rep = mirror_identity_check(5);
    ASSERT_EQ(rep.checks.size(), 5U);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.identity << ": " << c.first_failure;
}

TEST(MirrorIdentity, PerturbedInvariantFails) {
    InvariantTable t = quintic_invariants(5);
    t.N[1] += 1;
    const Report rep = mirror_identity_check(5, t);
    EXPECT_FALSE(rep.passed());
    const CheckResult* f = rep.first_failed();
    ASSERT_NE(f, nullptr);
    EXPECT_NE(f->first_failure.find("q^2"), std::string::npos) << f->first_failure;
}

TEST(MixedSubstitute, ZeroShiftIsIdentity) {
    const QMixedSeries J = quintic_J(4);
    EXPECT_EQ(mixed_substitute(J, QSeries(4)), J);
}

TEST(CaseI, OperatorIdentityHolds) {
    for (auto [m, l] : std::vector<std::pair<unsigned, unsigned>>{{5, 3}, {4, 2}, {6, 5}, {3, 1}}) {
        const CheckResult c = case_i_check(HypergeomConfig::make(m, l, 5));
        EXPECT_TRUE(c.passed) << m << "," << l << ": " << c.first_failure;
    }
}

TEST(CaseI, DetectsSingleCoefficientPerturbation) {
    const auto cfg = HypergeomConfig::make(5, 3, 5);
    QMixedSeries S = hyper_series_SX(cfg);
    S.at(2, 0, 3) += 1;
    const CheckResult c = check_case_i_identity(S, 5, 3);
    EXPECT_FALSE(c.passed);
    EXPECT_FALSE(c.first_failure.empty());
}

TEST(CaseI, RejectsWrongRegime) {
    EXPECT_THROW(case_i_check(HypergeomConfig::make(4, 5, 3)), DomainError);
    EXPECT_THROW(case_i_check(HypergeomConfig::make(4, 4, 3)), DomainError);
}

TEST(CaseII, OperatorIdentityHolds) {
    for (unsigned m : {2U, 3U, 4U}) {
        auto [S, c] = case_ii_transform(HypergeomConfig::make(m, m, 5));
        EXPECT_TRUE(c.passed) << m << ": " << c.first_failure;
        // the unmodified series does not satisfy it
        EXPECT_FALSE(check_case_ii_identity(hyper_series_SX(HypergeomConfig::make(m, m, 5)), m).passed);
    }
}

TEST(CaseII, DetectsSingleCoefficientPerturbation) {
    auto [S, c] = case_ii_transform(HypergeomConfig::make(4, 4, 5));
    S.at(1, 1, 2) -= frac(1, 3);
    EXPECT_FALSE(check_case_ii_identity(S, 4).passed);
    EXPECT_THROW(case_ii_transform(HypergeomConfig::make(4, 3, 5)), DomainError);
}
