#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gwmirror {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after every arithmetic operation; values built from strings are
// canonicalized in parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

// p/q in lowest terms. mpq_class's two-argument constructor does not reduce.
inline Rational frac(long p, long q) {
    if (q == 0) throw std::domain_error("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Rational frac(const Integer& p, const Integer& q) {
    if (q == 0) throw std::domain_error("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// "p/q" with q > 0, or "p" when q = 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + std::string(text));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational pow(const Rational& x, unsigned n) {
    Rational r = 1;
    Rational b = x;
    while (n) {
        if (n & 1U) r *= b;
        b *= b;
        n >>= 1U;
    }
    return r;
}

// Harmonic number 1 + 1/2 + ... + 1/n.
inline Rational harmonic(unsigned long n) {
    Rational h = 0;
    for (unsigned long r = 1; r <= n; ++r) h += frac(1, static_cast<long>(r));
    return h;
}

}  // namespace gwmirror
