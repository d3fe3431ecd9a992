#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/rational.hpp>

namespace gwmirror {

using LambdaTuple = std::vector<Rational>;

inline void require_distinct(const LambdaTuple& lambda) {
    std::set<Rational> seen(lambda.begin(), lambda.end());
    if (seen.size() != lambda.size()) throw DomainError("lambda values must be pairwise distinct");
}

// True when every quotient (lambda_a - lambda_b)/r, a != b, 1 <= r <= bound,
// is distinct from every other one. This rules out coincidences between a
// recursion evaluation point and a pole of another correlator.
inline bool lambda_is_generic(const LambdaTuple& lambda, unsigned bound) {
    std::set<Rational> seen;
    std::size_t count = 0;
    for (std::size_t a = 0; a < lambda.size(); ++a)
        for (std::size_t b = 0; b < lambda.size(); ++b) {
            if (a == b) continue;
            for (unsigned r = 1; r <= bound; ++r) {
                Rational v = (lambda[a] - lambda[b]) / r;
                if (sgn(v) == 0) return false;
                seen.insert(v);
                ++count;
            }
        }
    return seen.size() == count;
}

// (0, 1, ..., m) scaled by a random nonzero rational, plus distinct random
// offsets; redrawn until lambda_is_generic(bound) holds.
inline LambdaTuple sample_lambda(std::size_t m, std::mt19937_64& rng, unsigned bound = 8) {
    std::uniform_int_distribution<long> small(1, 7);
    std::uniform_int_distribution<long> offset_num(-60, 60);
    std::uniform_int_distribution<long> offset_den(1, 13);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Rational scale = frac(small(rng) * (small(rng) % 2 ? 1 : -1), small(rng));
        LambdaTuple lambda;
        for (std::size_t i = 0; i <= m; ++i)
            lambda.push_back(scale * static_cast<long>(i) + frac(offset_num(rng), offset_den(rng)));
        if (lambda_is_generic(lambda, bound)) return lambda;
    }
    throw DegenerateLambdaError("could not sample a generic lambda tuple");
}

inline LambdaTuple sample_lambda(std::size_t m, std::uint64_t seed, unsigned bound = 8) {
    std::mt19937_64 rng(seed);
    return sample_lambda(m, rng, bound);
}

}  // namespace gwmirror
