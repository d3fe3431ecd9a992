// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gwmirror/classp.hpp>
#include <gwmirror/localization.hpp>
#include <gwmirror/mirror.hpp>
#include <gwmirror/recursion.hpp>

#include "../tools/cli_app.hpp"
#include "test_util.hpp"

using namespace gwmirror;

namespace {

// Collects the first failure of a criterion.
struct Outcome {
    bool ok = true;
    std::string why;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

using Criterion = std::function<void(Outcome&)>;

std::string run_cli_capture(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = gwcli::run_cli(args, out, err);
    return out.str();
}

void ac1(Outcome& o) {
    const InvariantTable t = quintic_invariants(4);
    const std::vector<Rational> expect{2875, 609250, 317206375, Rational(242467530000L)};
    for (std::size_t d = 1; d <= 4; ++d)
        o.require(t.n[d - 1] == expect[d - 1], "n_" + std::to_string(d) + " = " + to_string(t.n[d - 1]));
    int code = 0;
    const std::string csv = run_cli_capture({"invariants", "--order", "4", "--format", "csv"}, code);
    o.require(code == 0 && csv.find("4,15517926796875/64,242467530000\n") != std::string::npos, "CLI table");
    const InvariantTable t10 = quintic_invariants(10);
    o.require(t10.all_integral(), "non-integral n_d through order 10");
    o.require(multiple_cover_sum(t10.n) == t10.N, "multiple-cover round trip");
    for (std::size_t d = 1; d <= 4; ++d) o.require(t10.n[d - 1] == expect[d - 1], "order-10 prefix");
}

void ac2(Outcome& o) {
    for (unsigned d : {1U, 2U}) {
        const auto r = oracle_crosscheck(d, 3, 17 + d, 2);
        o.require(r.result.passed, "degree " + std::to_string(d) + ": " + r.result.first_failure);
        o.require(r.sums.size() >= 3, "fewer than 3 lambda tuples");
        o.require(r.sums.front() == (d == 1 ? Rational(2875) : frac(4876875, 8)), "graph sum value");
        o.require(r.pipeline == quintic_invariants(d).N[d - 1], "pipeline value");
    }
}

void ac3(Outcome& o) {
    const QMixedSeries S = hyper_series_SX(HypergeomConfig::make(4, 5, 8));
    for (std::size_t b = 0; b < 4; ++b)
        o.require(!S.component(b).is_zero(), "I_" + std::to_string(b) + " vanishes");
    const QMixedSeries R = hypergeometric_operator_residual(S, 4, 5);
    o.require(R.is_zero(), R.is_zero() ? "" : "residual at " + R.first_nonzero()->str());
    QMixedSeries bad = S;
    bad.at(3, 0, 6) += 1;
    o.require(!hypergeometric_operator_residual(bad, 4, 5).is_zero(), "perturbation not detected");
}

void ac4(Outcome& o) {
    for (auto [m, l] : std::vector<std::pair<unsigned, unsigned>>{{5, 3}, {4, 2}, {6, 5}}) {
        const auto cfg = HypergeomConfig::make(m, l, 5);
        const CheckResult c = case_i_check(cfg);
        o.require(c.passed, "case i " + std::to_string(m) + "," + std::to_string(l) + ": " + c.first_failure);
        QMixedSeries S = hyper_series_SX(cfg);
        S.at(1, 0, 4) += frac(1, 7);
        o.require(!check_case_i_identity(S, m, l).passed, "case i perturbation not detected");
    }
    for (unsigned m : {3U, 4U}) {
        auto [S, c] = case_ii_transform(HypergeomConfig::make(m, m, 5));
        o.require(c.passed, "case ii " + std::to_string(m) + ": " + c.first_failure);
        S.at(2, 1, 3) -= frac(1, 5);
        o.require(!check_case_ii_identity(S, m).passed, "case ii perturbation not detected");
    }
}

void ac5(Outcome& o) {
    for (std::uint64_t seed : {101U, 102U}) {
        for (auto [m, l] : std::vector<std::pair<unsigned, unsigned>>{{5, 3}, {4, 2}}) {
            const auto lambda = sample_lambda(m, seed, 8);
            const auto r = verify_recursion(zstar_family(m, l, 4, lambda), recursion_coeffs(Regime::sub_m, m, l, lambda, 4), 4);
            o.require(r.result.passed, "sub-m recursion: " + r.result.first_failure);
        }
        for (unsigned m : {3U, 4U}) {
            const auto lambda = sample_lambda(m, seed, 8);
            const auto Y = equal_m_modified_family(zstar_family(m, m, 4, lambda));
            const auto r = verify_recursion(Y, recursion_coeffs(Regime::equal_m, m, m, lambda, 4), 4);
            o.require(r.result.passed, "modified recursion: " + r.result.first_failure);
        }
        const auto lambda = sample_lambda(4, seed, 8);
        const auto r = verify_recursion(zstar_family(4, 5, 4, lambda), recursion_coeffs(Regime::calabi_yau, 4, 5, lambda, 4), 4);
        o.require(r.result.passed, "CY residuals: " + r.result.first_failure);
        for (std::size_t i = 0; i <= 4; ++i)
            for (std::size_t d = 0; d <= 4; ++d)
                o.require(r.initial_data[i][d].degree() <= static_cast<int>(d), "CY residual degree exceeds d");
    }
}

void ac6(Outcome& o) {
    const auto lambda = sample_lambda(4, 111, 8);
    const auto Z = zstar_family(4, 5, 3, lambda);
    const ClassPData cp = classP_extract(Z, 3, 2);
    for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t d = 0; d <= 3; ++d)
            o.require(cp.N[i][d].degree() <= static_cast<int>(5 * d), "N_id degree bound");
    for (std::size_t d = 0; d <= 3; ++d) o.require(cp.E[d] == zstar_E_closed_form(4, d), "E_d closed form");
    std::mt19937_64 rng(112);
    for (int t = 0; t < 10; ++t) {
        const Rational P = gwtest::random_rational(rng), h = gwtest::random_rational(rng);
        Rational direct = 1;
        for (std::size_t r = 0; r <= 15; ++r) direct *= 5 * P - Rational(static_cast<long>(r)) * h;
        o.require(cp.E[3].eval(P, h) == direct, "E_3 point value");
    }
    const CheckResult c = check_phi_polynomial(phi_double_correlator(Z, 4, 3, 2));
    o.require(c.passed, "Phi: " + c.first_failure);
}

void ac7(Outcome& o) {
    std::mt19937_64 rng(121);
    const auto lambda = sample_lambda(4, rng, 8);
    const auto Z = zstar_family(4, 5, 3, lambda);
    const PhiSeries phi = phi_double_correlator(Z, 3, 3, 2);
    QSeries f = gwtest::random_series(rng, 3);
    f[0] = 1;
    const QSeries g = gwtest::random_series(rng, 3, true);
    std::vector<Rational> w;
    Rational C = 0;
    for (std::size_t a = 0; a <= 4; ++a) {
        w.push_back(gwtest::random_rational(rng));
        C += w.back() * lambda[a];
    }
    o.require(phi_double_correlator(transform_family(Z, TransformKind::a, f), 3, 3, 2) == phi_law_a(phi, f), "law (a)");
    o.require(phi_double_correlator(transform_family(Z, TransformKind::b, g), 3, 3, 2) == phi_law_b(phi, g), "law (b)");
    o.require(phi_double_correlator(transform_family(Z, TransformKind::c, g, w), 3, 3, 2) == phi_law_c(phi, g, C),
              "law (c)");
    const CheckResult t = check_trivial_mod_hbar2(inverse_composite(Z));
    o.require(t.passed, "inverse composite: " + t.first_failure);
}

void ac8(Outcome& o) {
    const MirrorMap mm = mirror_map_build(4, 5);
    o.require(mm.g[1] == 770, "g_1 = " + to_string(mm.g[1]));
    const Report rep = mirror_identity_check(5);
    for (const auto& c : rep.checks) o.require(c.passed, c.identity + ": " + c.first_failure);
    o.require(rep.checks.size() == 5, "expected five component checks");
}

void ac9(Outcome& o) {
    for (unsigned m = 2; m <= 4; ++m)
        for (std::size_t d = 1; d <= 3; ++d) {
            const Rational want = Rational(1) / pow(Rational(factorial(d)), m + 1);
            o.require(descendent_value(m, d) == want,
                      "m=" + std::to_string(m) + " d=" + std::to_string(d) + ": " + to_string(descendent_value(m, d)));
        }
}

void ac10(Outcome& o) {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t D = 1 + trial % 8;
        QSeries a = gwtest::random_series(rng, D), b = gwtest::random_series(rng, D), c = gwtest::random_series(rng, D);
        o.require((a * b) * c == a * (b * c) && a * b == b * a && a * (b + c) == a * b + a * c, "ring law");
        QSeries z = gwtest::random_series(rng, D, true);
        o.require(series_log(series_exp(z)) == z, "log(exp a) = a");
        QSeries u = z;
        u[0] = 1;
        o.require(series_exp(series_log(u)) == u, "exp(log u) = u");
        QSeries w = series_reversion(u);
        QSeries qw = w.shift(1);
        o.require(qw * series_compose(u, qw) == QSeries::monomial(D, 1), "reversion round trip");
    }
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"invariants", "--order", "8", "--format", "json"},
             {"oracle", "--degree", "2", "--seed", "9"},
             {"verify", "class-p", "--order", "2", "--seed", "5", "--format", "json"}}) {
        int c1 = 0, c2 = 0, c3 = 0;
        const std::string r1 = run_cli_capture(args, c1);
        const std::string r2 = run_cli_capture(args, c2);
        auto threaded = args;
        threaded.insert(threaded.end(), {"--threads", "3"});
        const std::string r3 = run_cli_capture(threaded, c3);
        o.require(c1 == 0 && c2 == 0 && c3 == 0, "non-zero exit for " + args.front());
        o.require(r1 == r2 && r1 == r3, "output differs between runs for " + args.front());
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"AC1 quintic virtual counts", ac1},
        {"AC2 localization oracle", ac2},
        {"AC3 Picard-Fuchs annihilation", ac3},
        {"AC4 case (i)/(ii) operator identities", ac4},
        {"AC5 recursion verification", ac5},
        {"AC6 class-P suite", ac6},
        {"AC7 transformation laws", ac7},
        {"AC8 mirror map and prepotential", ac8},
        {"AC9 descendents", ac9},
        {"AC10 property suites and determinism", ac10},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.why = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << timing << ")";
        if (!o.ok) std::cout << ": " << o.why;
        std::cout << "\n";
        failed += !o.ok;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
