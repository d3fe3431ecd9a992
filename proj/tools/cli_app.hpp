#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gwmirror/classp.hpp>
#include <gwmirror/hypergeom.hpp>
#include <gwmirror/localization.hpp>
#include <gwmirror/mirror.hpp>
#include <gwmirror/recursion.hpp>
#include <gwmirror/report.hpp>

namespace gwcli {

using namespace gwmirror;
using json = nlohmann::ordered_json;

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct RunConfig {
    unsigned m = 4;
    unsigned l = 5;
    std::size_t order = 6;
    std::size_t hbar_depth = 0;  // 0: the minimum the order needs
    std::string lambda;          // empty: sample from seed
    std::uint64_t seed = 0;
    std::string format = "text";
    unsigned threads = 1;
    std::string out;
};

// Thrown for precondition violations that map to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

inline LambdaTuple resolve_lambda(const RunConfig& cfg, unsigned bound) {
    if (cfg.lambda.empty()) return sample_lambda(cfg.m, cfg.seed, bound);
    LambdaTuple lambda;
    std::stringstream ss(cfg.lambda);
    std::string item;
    while (std::getline(ss, item, ',')) lambda.push_back(parse_rational(item));
    if (lambda.size() != cfg.m + 1) throw UsageError("--lambda needs m+1 = " + std::to_string(cfg.m + 1) + " values");
    require_distinct(lambda);
    return lambda;
}

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
}

inline std::string render_invariants(const RunConfig& cfg, const InvariantTable& t) {
    std::ostringstream os;
    if (cfg.format == "json") {
        json j{{"m", cfg.m}, {"l", cfg.l}, {"rows", json::array()}};
        for (std::size_t d = 1; d <= t.N.size(); ++d)
            j["rows"].push_back({{"d", d}, {"N", to_string(t.N[d - 1])}, {"n", to_string(t.n[d - 1])}});
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "d,N_d,n_d\n";
        for (std::size_t d = 1; d <= t.N.size(); ++d) os << d << "," << to_string(t.N[d - 1]) << "," << to_string(t.n[d - 1]) << "\n";
    } else {
        os << "d\tN_d\tn_d\n";
        for (std::size_t d = 1; d <= t.N.size(); ++d)
            os << d << "\t" << to_string(t.N[d - 1]) << "\t" << to_string(t.n[d - 1]) << "\n";
    }
    return os.str();
}

inline std::string render_report(const RunConfig& cfg, const std::string& check, const Report& rep) {
    std::ostringstream os;
    if (cfg.format == "json") {
        json j{{"check", check}, {"passed", rep.passed()}, {"results", json::array()}};
        for (const auto& c : rep.checks) {
            json r{{"identity", c.identity}, {"anchor", c.anchor}, {"passed", c.passed}};
            if (!c.passed) r["first_failure"] = c.first_failure;
            if (!c.detail.empty()) r["detail"] = c.detail;
            j["results"].push_back(std::move(r));
        }
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "identity,anchor,status,first_failure\n";
        for (const auto& c : rep.checks)
            os << csv_field(c.identity) << "," << csv_field(c.anchor) << "," << (c.passed ? "pass" : "fail") << ","
               << csv_field(c.first_failure) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            os << (c.passed ? "PASS  " : "FAIL  ") << c.identity << "\n      " << c.anchor << "\n";
            if (!c.detail.empty()) os << "      " << c.detail << "\n";
            if (!c.passed) os << "      first failure: " << c.first_failure << "\n";
        }
        os << (rep.passed() ? "all checks passed" : "verification failed") << "\n";
    }
    return os.str();
}

inline CheckResult mixed_zero(const std::string& identity, const std::string& anchor, const QMixedSeries& residual) {
    CheckResult c{identity, anchor, true, {}, {}};
    if (auto idx = residual.first_nonzero()) {
        c.passed = false;
        c.first_failure = idx->str() + ": residual " + to_string(residual.at(idx->h, idx->t, idx->q));
    }
    return c;
}

inline CheckResult class_p_violation(const std::string& identity, const std::string& what) {
    return {identity, "N_id and E_d are hbar-polynomials", false, what, {}};
}

inline Report verify_check(const RunConfig& cfg, const std::string& check) {
    Report rep;
    const auto hcfg = HypergeomConfig::make(cfg.m, cfg.l, cfg.order);
    const Regime regime = check == "descendents" ? Regime::sub_m : regime_for(cfg.m, cfg.l);
    const std::string ml = "m=" + std::to_string(cfg.m) + ", l=" + std::to_string(cfg.l);

    if (check == "picard-fuchs") {
        require(regime == Regime::calabi_yau, "picard-fuchs needs l = m+1");
        rep.add(mixed_zero("Picard-Fuchs operator (" + ml + ")", "D^m I_b = l q prod_{r=1}^{l-1}(l D + r) I_b, D = d/dt",
                           hypergeometric_operator_residual(hyper_series_SX(hcfg), cfg.m, cfg.l)));
    } else if (check == "case-i") {
        require(regime == Regime::sub_m, "case-i needs l < m");
        rep.add(case_i_check(hcfg));
    } else if (check == "case-ii") {
        require(regime == Regime::equal_m, "case-ii needs l = m");
        rep.add(case_ii_transform(hcfg).second);
    } else if (check == "recursion-i" || check == "recursion-ii" || check == "recursion-cy") {
        const Regime want = check == "recursion-i" ? Regime::sub_m
                            : check == "recursion-ii" ? Regime::equal_m
                                                      : Regime::calabi_yau;
        require(regime == want, check + " needs " +
                                    (want == Regime::sub_m ? "l < m" : want == Regime::equal_m ? "l = m" : "l = m+1"));
        const auto lambda = resolve_lambda(cfg, static_cast<unsigned>(cfg.order) + 1);
        CorrelatorFamily Z = zstar_family(cfg.m, cfg.l, cfg.order, lambda);
        if (want == Regime::equal_m) Z = equal_m_modified_family(Z);
        auto r = verify_recursion(Z, recursion_coeffs(want, cfg.m, cfg.l, lambda, cfg.order), cfg.order);
        rep.add(r.result);
    } else if (check == "class-p") {
        require(regime == Regime::calabi_yau, "class-p needs l = m+1");
        const auto lambda = resolve_lambda(cfg, static_cast<unsigned>(cfg.order) + 1);
        const auto Z = zstar_family(cfg.m, cfg.l, cfg.order, lambda);
        try {
            const ClassPData cp = classP_extract(Z, cfg.order, cfg.threads);
            CheckResult c{"E_d closed form (" + ml + ")", "E_d = prod_{r=0}^{(m+1)d}((m+1)P - r hbar)", true, {}, {}};
            for (std::size_t d = 0; d <= cfg.order; ++d)
                if (!(cp.E[d] == zstar_E_closed_form(cfg.m, d))) {
                    c.passed = false;
                    c.first_failure = "d=" + std::to_string(d);
                    break;
                }
            rep.add(c);
        } catch (const ClassPViolation& e) {
            rep.add(class_p_violation("N_id / E_d extraction", e.what()));
        }
        rep.merge(class_p_report(Z, cfg.order, 4, cfg.threads));
        const auto rc = recursion_coeffs(Regime::calabi_yau, cfg.m, cfg.l, lambda, cfg.order);
        const auto r = verify_recursion(Z, rc, cfg.order);
        if (r.result.passed) {
            rep.add(check_two_coefficient(Z, r.initial_data));
            const auto Y = forward_solve_cy(rc, r.initial_data, cfg.order);
            CheckResult u{"uniqueness from initial data", "the recursion and I_id determine the family", true, {}, {}};
            for (std::size_t i = 0; i < Z.size(); ++i)
                if (!(Y[i] == Z[i])) {
                    u.passed = false;
                    u.first_failure = "i=" + std::to_string(i);
                    break;
                }
            rep.add(u);
        }
    } else if (check == "phi-poly") {
        require(regime == Regime::calabi_yau, "phi-poly needs l = m+1");
        const auto lambda = resolve_lambda(cfg, static_cast<unsigned>(cfg.order) + 1);
        rep.add(check_phi_polynomial(phi_double_correlator(zstar_family(cfg.m, cfg.l, cfg.order, lambda), 4, cfg.order,
                                                           cfg.threads)));
    } else if (check == "transformations") {
        require(regime == Regime::calabi_yau, "transformations needs l = m+1");
        const auto lambda = resolve_lambda(cfg, static_cast<unsigned>(cfg.order) + 1);
        const auto Z = zstar_family(cfg.m, cfg.l, cfg.order, lambda);
        std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
        auto rnd = [&] { return frac(num(rng), den(rng)); };
        QSeries f(cfg.order), g(cfg.order);
        f[0] = 1;
        for (std::size_t d = 1; d <= cfg.order; ++d) {
            f[d] = rnd();
            g[d] = rnd();
        }
        std::vector<Rational> w;
        Rational C = 0;
        for (std::size_t a = 0; a <= cfg.m; ++a) {
            w.push_back(rnd());
            C += w.back() * lambda[a];
        }
        const std::size_t kz = 3;
        const PhiSeries phi = phi_double_correlator(Z, kz, cfg.order, cfg.threads);
        auto law = [&](const std::string& name, const std::string& anchor, const CorrelatorFamily& Y,
                       const PhiSeries& expect) {
            const PhiSeries got = phi_double_correlator(Y, kz, cfg.order, cfg.threads);
            CheckResult c{name, anchor, true, {}, {}};
            for (std::size_t n = 0; n <= cfg.order && c.passed; ++n)
                for (std::size_t k = 0; k <= kz; ++k)
                    if (!(got.at(k, n) == expect.at(k, n))) {
                        c.passed = false;
                        c.first_failure = "z^" + std::to_string(k) + " q^" + std::to_string(n);
                        break;
                    }
            rep.add(c);
        };
        law("transformation (a) on Phi", "Phi^{fY}(z, q) = f(q e^{z hbar}) f(q) Phi^Y(z, q)",
            transform_family(Z, TransformKind::a, f), phi_law_a(phi, f));
        law("transformation (b) on Phi", "Phi^{(b)Y}(z, q) = Phi^Y(z + (g(q e^{z hbar}) - g(q))/hbar, q e^{g(q)})",
            transform_family(Z, TransformKind::b, g), phi_law_b(phi, g));
        law("transformation (c) on Phi", "Phi^{(c)Y}(z, q) = exp(C (g(q e^{z hbar}) - g(q))/hbar) Phi^Y(z, q)",
            transform_family(Z, TransformKind::c, g, w), phi_law_c(phi, g, C));
        CheckResult inv = check_trivial_mod_hbar2(inverse_composite(Z));
        inv.identity = "inverse composite transformation of Z*";
        rep.add(inv);
        CorrelatorFamily Y = transform_family(Z, TransformKind::a, f);
        Y = transform_family(Y, TransformKind::b, g);
        Y = transform_family(Y, TransformKind::c, g, w);
        for (auto c : class_p_report(Y, cfg.order, kz, cfg.threads).checks) {
            c.identity = "class P closure: " + c.identity;
            rep.add(std::move(c));
        }
    } else if (check == "mirror-identity") {
        require(cfg.m == 4 && cfg.l == 5, "mirror-identity is implemented for the quintic (m=4, l=5)");
        rep.merge(mirror_identity_check(cfg.order));
    } else if (check == "descendents") {
        const std::size_t depth = cfg.hbar_depth ? cfg.hbar_depth : (cfg.m + 1) * cfg.order + cfg.m;
        const auto S = hyper_series_Pm(cfg.m, cfg.order, depth);
        CheckResult op{"quantum differential equation on P^" + std::to_string(cfg.m),
                       "((hbar d/dt)^{m+1} - e^t) S_{P^m} = 0", true, {}, {}};
        const auto R = quantum_de_residual_Pm(S, cfg.m);
        if (auto idx = R.first_nonzero()) {
            op.passed = false;
            op.first_failure = idx->str();
        }
        rep.add(op);
        CheckResult dv{"two-point descendents on P^" + std::to_string(cfg.m),
                       "<tau_{dm+d-2}(T_m)>_d = 1/(d!)^{m+1}", true, {}, {}};
        for (std::size_t d = 1; d <= cfg.order; ++d) {
            const Rational got = S.at(0, 0, d).coeff((cfg.m + 1) * d);
            const Rational want = Rational(1) / pow(Rational(factorial(d)), cfg.m + 1);
            if (got != want) {
                dv.passed = false;
                dv.first_failure = "d=" + std::to_string(d) + ": " + to_string(got) + " vs " + to_string(want);
                break;
            }
        }
        rep.add(dv);
    } else {
        throw UsageError("unknown check: " + check);
    }
    return rep;
}

inline std::string render_oracle(const RunConfig& cfg, unsigned degree, const OracleCrosscheck& r) {
    std::ostringstream os;
    if (cfg.format == "json") {
        json j{{"degree", degree}, {"N", to_string(r.sums.front())}, {"series", to_string(r.pipeline)},
               {"passed", r.result.passed}, {"sums", json::array()}};
        for (const auto& s : r.sums) j["sums"].push_back(to_string(s));
        if (!r.result.passed) j["first_failure"] = r.result.first_failure;
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "degree,N,series,status\n"
           << degree << "," << to_string(r.sums.front()) << "," << to_string(r.pipeline) << ","
           << (r.result.passed ? "pass" : "fail") << "\n";
    } else {
        os << to_string(r.sums.front()) << "\n";
        os << "graph sums over " << r.sums.size() << " lambda tuples; series value " << to_string(r.pipeline) << "; "
           << (r.result.passed ? "match" : "MISMATCH: " + r.result.first_failure) << "\n";
    }
    return os.str();
}

// Runs one command line. Returns the exit code; normal output goes to `out`,
// diagnostics to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genus-0 quintic invariants and the identities behind them, in exact arithmetic"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "ambient dimension of P^m")->check(CLI::Range(1, 12));
        sub->add_option("--l", cfg.l, "hypersurface degree")->check(CLI::Range(1, 13));
        sub->add_option("--order", cfg.order, "q-truncation order")->check(CLI::Range(0, 60));
        sub->add_option("--hbar-depth", cfg.hbar_depth, "1/hbar depth for S_{P^m} (default: minimum needed)");
        sub->add_option("--lambda", cfg.lambda, "explicit lambda tuple a,b,c,... as rationals p/q");
        sub->add_option("--seed", cfg.seed, "seed for lambda sampling");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 256));
        sub->add_option("--out", cfg.out, "also write the output to this file");
    };
    CLI::App* inv = app.add_subcommand("invariants", "quintic N_d and n_d from the mirror map");
    add_common(inv);
    std::string check;
    CLI::App* ver = app.add_subcommand("verify", "verify one family of identities");
    add_common(ver);
    ver->add_option("check", check, "which identities")
        ->required()
        ->check(CLI::IsMember({"picard-fuchs", "case-i", "case-ii", "recursion-i", "recursion-ii", "recursion-cy",
                               "class-p", "phi-poly", "transformations", "mirror-identity", "descendents"}));
    unsigned degree = 1;
    unsigned trials = 3;
    CLI::App* orc = app.add_subcommand("oracle", "localization graph sum for N_1 or N_2");
    add_common(orc);
    orc->add_option("--degree", degree, "degree (1 or 2)")->required();
    orc->add_option("--trials", trials, "number of random lambda tuples")->check(CLI::Range(1, 100));

    std::vector<const char*> argv{"gwmirror"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    std::string text;
    int code = kPass;
    try {
        if (inv->parsed()) {
            require(cfg.m == 4 && cfg.l == 5, "invariants is implemented for the quintic (m=4, l=5)");
            text = render_invariants(cfg, quintic_invariants(cfg.order));
        } else if (ver->parsed()) {
            require(cfg.order >= 1, "verify needs --order >= 1");
            // P^m descendents do not involve a hypersurface
            if (check != "descendents") HypergeomConfig::make(cfg.m, cfg.l, cfg.order).validate();
            const Report rep = verify_check(cfg, check);
            text = render_report(cfg, check, rep);
            code = rep.passed() ? kPass : kFail;
        } else {
            require(degree == 1 || degree == 2, "oracle supports --degree 1 or 2 only");
            require(cfg.m == 4 && cfg.l == 5, "oracle is implemented for the quintic (m=4, l=5)");
            const auto r = oracle_crosscheck(degree, trials, cfg.seed, cfg.threads);
            text = render_oracle(cfg, degree, r);
            code = r.result.passed ? kPass : kFail;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DegenerateLambdaError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        // pole, consistency and class-P failures are verification outcomes
        err << "verification failed: " << e.what() << "\n";
        return kFail;
    }
    out << text;
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << cfg.out << "\n";
            return kUsage;
        }
        f << text;
    }
    return code;
}

}  // namespace gwcli
