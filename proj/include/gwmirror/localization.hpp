#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/lambda.hpp>
#include <gwmirror/mirror.hpp>
#include <gwmirror/parallel.hpp>
#include <gwmirror/rational.hpp>
#include <gwmirror/report.hpp>

namespace gwmirror {

enum class GraphShape { single_edge_d1, single_edge_d2, two_edge_path };

struct GraphEdge {
    std::size_t v;
    std::size_t w;
    unsigned delta;
};

// Torus-fixed locus of genus-0 unmarked maps: a tree whose vertices carry
// fixed-point labels mu(v) in {0..m} and whose edges carry degrees.
struct DecoratedGraph {
    std::vector<unsigned> vertices;
    std::vector<GraphEdge> edges;
    GraphShape shape = GraphShape::single_edge_d1;
    unsigned automorphisms = 1;

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& e : edges) d += e.delta;
        return d;
    }
    // |A| = prod delta(e) * |Aut|
    unsigned group_order() const {
        unsigned g = automorphisms;
        for (const auto& e : edges) g *= e.delta;
        return g;
    }
    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k < vertices.size(); ++k) s += (k ? "-" : "") + std::to_string(vertices[k]);
        s += " [";
        for (std::size_t k = 0; k < edges.size(); ++k) s += (k ? "," : "") + std::to_string(edges[k].delta);
        return s + "]";
    }
};

inline std::vector<DecoratedGraph> enumerate_graphs(unsigned m, unsigned d) {
    if (d < 1 || d > 2) throw UnsupportedError("fixed-locus enumeration is implemented for degree 1 and 2 only");
    std::vector<DecoratedGraph> out;
    const GraphShape single = d == 1 ? GraphShape::single_edge_d1 : GraphShape::single_edge_d2;
    for (unsigned i = 0; i <= m; ++i)
        for (unsigned j = i + 1; j <= m; ++j) out.push_back({{i, j}, {{0, 1, d}}, single, 1});
    if (d == 2)
        for (unsigned j = 0; j <= m; ++j)
            for (unsigned i = 0; i <= m; ++i)
                for (unsigned k = i; k <= m; ++k) {
                    if (i == j || k == j) continue;
                    out.push_back({{i, j, k}, {{0, 1, 1}, {1, 2, 1}}, GraphShape::two_edge_path, i == k ? 2U : 1U});
                }
    return out;
}

struct OracleOptions {
    // Multiplies every node-smoothing factor; 1 is correct, anything else is
    // a deliberate fault used to exercise the cross-check.
    Rational node_factor_scale = 1;
};

namespace detail {

inline Rational weight(const Rational& x) {
    if (sgn(x) == 0) throw DegenerateLambdaError("zero fixed-point weight");
    return x;
}

}  // namespace detail

// e(E_d)|_Gamma / (|A| e(N_Gamma)) with E_d = H^0(f^* O(l)).
//  e(E): per edge prod_{a=0}^{l delta}((l delta - a) lambda_i + a lambda_j)/delta,
//        divided by l lambda_mu at each node, where the edge sections overlap.
//  e(N): per edge the nonzero weights (a lambda_i + (delta - a) lambda_j)/delta - lambda_k,
//        a = 0..delta, k = 0..m; divided by prod_{k != mu}(lambda_mu - lambda_k) at each
//        node; divided by the flag weight omega_F at each valence-1 vertex; times
//        (omega_F1 + omega_F2) at each node. omega_F = (lambda_mu(v) - lambda_mu(v'))/delta.
inline Rational graph_contribution(const DecoratedGraph& G, const LambdaTuple& lambda, unsigned m, unsigned l,
                                   const OracleOptions& opt = {}) {
    if (lambda.size() != m + 1) throw DomainError("lambda must have m+1 entries");
    for (auto v : G.vertices)
        if (v > m) throw DomainError("vertex label out of range");
    Rational eE = 1, eN = 1;
    std::vector<std::vector<Rational>> flags(G.vertices.size());
    for (const auto& e : G.edges) {
        const unsigned i = G.vertices[e.v], j = G.vertices[e.w];
        if (i == j) throw DomainError("adjacent vertices must carry distinct labels");
        const Rational dl(static_cast<long>(e.delta));
        for (unsigned a = 0; a <= l * e.delta; ++a)
            eE *= detail::weight((Rational(static_cast<long>(l * e.delta - a)) * lambda[i] + Rational(a) * lambda[j]) / dl);
        for (unsigned k = 0; k <= m; ++k)
            for (unsigned a = 0; a <= e.delta; ++a) {
                if ((k == i && a == e.delta) || (k == j && a == 0)) continue;
                eN *= detail::weight((Rational(a) * lambda[i] + Rational(static_cast<long>(e.delta - a)) * lambda[j]) / dl -
                                     lambda[k]);
            }
        flags[e.v].push_back((lambda[i] - lambda[j]) / dl);
        flags[e.w].push_back((lambda[j] - lambda[i]) / dl);
    }
    for (std::size_t v = 0; v < G.vertices.size(); ++v) {
        const unsigned mu = G.vertices[v];
        if (flags[v].size() == 1) {
            eN /= detail::weight(flags[v][0]);
        } else if (flags[v].size() == 2) {
            eE /= detail::weight(Rational(l) * lambda[mu]);
            for (unsigned k = 0; k <= m; ++k)
                if (k != mu) eN /= lambda[mu] - lambda[k];
            eN *= detail::weight((flags[v][0] + flags[v][1]) * opt.node_factor_scale);
        } else {
            throw UnsupportedError("vertices of valence > 2 need psi-class integrals");
        }
    }
    return eE / (Rational(G.group_order()) * eN);
}

inline Rational oracle_sum(unsigned m, unsigned l, unsigned d, const LambdaTuple& lambda, unsigned threads = 1,
                           const OracleOptions& opt = {}) {
    const auto graphs = enumerate_graphs(m, d);
    std::vector<Rational> parts(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t k) { parts[k] = graph_contribution(graphs[k], lambda, m, l, opt); });
    Rational total = 0;
    for (const auto& p : parts) total += p;
    return total;
}

struct OracleCrosscheck {
    CheckResult result;
    std::vector<LambdaTuple> lambdas;
    std::vector<Rational> sums;
    Rational pipeline;
};

// Quintic N_d from graph sums at `trials` random lambda tuples, compared with
// each other and with the series pipeline.
inline OracleCrosscheck oracle_crosscheck(unsigned d, unsigned trials, std::uint64_t seed = 0, unsigned threads = 1,
                                          const OracleOptions& opt = {}) {
    if (d < 1 || d > 2) throw UnsupportedError("oracle supports degree 1 and 2 only");
    if (trials < 1) throw DomainError("oracle_crosscheck needs at least one trial");
    OracleCrosscheck out;
    out.pipeline = quintic_invariants(d).N[d - 1];
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        for (int attempt = 0;; ++attempt) {
            LambdaTuple lambda = sample_lambda(4, rng, 4);
            try {
                out.sums.push_back(oracle_sum(4, 5, d, lambda, threads, opt));
                out.lambdas.push_back(std::move(lambda));
                break;
            } catch (const DegenerateLambdaError&) {
                if (attempt > 100) throw;
            }
        }
    }
    out.result.identity = "localization graph sum, degree " + std::to_string(d);
    out.result.anchor = "N_d = sum over fixed loci of e(E_d)/(|A| e(N)), independent of lambda, equal to the series value";
    for (std::size_t t = 0; t < out.sums.size(); ++t)
        if (out.sums[t] != out.sums[0]) {
            out.result.passed = false;
            out.result.first_failure = "lambda-dependent sums: " + to_string(out.sums[0]) + " vs " + to_string(out.sums[t]);
            break;
        }
    if (out.result.passed && out.sums[0] != out.pipeline) {
        out.result.passed = false;
        out.result.first_failure = "graph sum " + to_string(out.sums[0]) + " vs series " + to_string(out.pipeline);
    }
    out.result.detail = "N_" + std::to_string(d) + " = " + to_string(out.sums[0]);
    return out;
}

}  // namespace gwmirror
