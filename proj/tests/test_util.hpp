#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gwmirror/hbar_rational.hpp>
#include <gwmirror/rational.hpp>
#include <gwmirror/trunc_series.hpp>

namespace gwtest {

using gwmirror::HbarRational;
using gwmirror::QPoly;
using gwmirror::Rational;
using gwmirror::TruncSeries;

// Small-height random rationals: numerator in [-h, h], denominator in [1, h].
inline Rational random_rational(std::mt19937_64& rng, long height = 9) {
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, height);
    return gwmirror::frac(num(rng), den(rng));
}

inline QPoly random_poly(std::mt19937_64& rng, int degree, long height = 5) {
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) c.push_back(random_rational(rng, height));
    return QPoly(std::move(c));
}

inline HbarRational random_hbar_rational(std::mt19937_64& rng, int deg_num = 2, int deg_den = 2) {
    QPoly den;
    while (den.is_zero()) den = random_poly(rng, deg_den);
    return HbarRational(random_poly(rng, deg_num), den);
}

inline TruncSeries<Rational> random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant = false) {
    TruncSeries<Rational> s(order);
    for (std::size_t k = 0; k <= order; ++k) s[k] = random_rational(rng);
    if (zero_constant) s[0] = 0;
    return s;
}

}  // namespace gwtest
