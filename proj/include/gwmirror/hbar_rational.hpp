#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/poly.hpp>
#include <gwmirror/rational.hpp>

namespace gwmirror {

// num(hbar) / den(hbar) over Q, kept in canonical form: gcd(num, den) = 1 and
// den monic. Canonical form makes structural equality mean equality of
// functions.
class HbarRational {
public:
    HbarRational() : num_(), den_(Rational(1)) {}
    HbarRational(long c) : HbarRational(Rational(c)) {}  // NOLINT
    HbarRational(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    HbarRational(QPoly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
    HbarRational(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    // Trusted constructor for a pair already known to be coprime.
    static HbarRational from_coprime(QPoly num, QPoly den) {
        if (den.is_zero()) throw DomainError("hbar-rational function with zero denominator");
        HbarRational r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        if (r.num_.is_zero()) r.den_ = QPoly(Rational(1));
        r.fix_sign();
        return r;
    }

    static HbarRational hbar() { return HbarRational(QPoly({Rational(0), Rational(1)})); }
    // a + b hbar
    static HbarRational linear(const Rational& a, const Rational& b) { return HbarRational(QPoly({a, b})); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

    QPoly as_polynomial() const {
        if (!is_polynomial()) throw StructuralError("hbar-rational function is not a polynomial: " + str());
        return num_;
    }

    Rational eval(const Rational& at) const {
        Rational d = den_.eval(at);
        if (sgn(d) == 0) throw PoleError(at);
        return num_.eval(at) / d;
    }

    // f(-hbar)
    HbarRational reflect() const { return HbarRational(num_.reflect(), den_.reflect()); }

    // Coefficients of hbar^0, hbar^-1, ..., hbar^-K in the expansion at
    // hbar = infinity. Requires deg num <= deg den (no positive powers).
    std::vector<Rational> laurent_expand(std::size_t K) const {
        std::vector<Rational> out(K + 1, Rational(0));
        if (is_zero()) return out;
        const int n = num_.degree();
        const int e = den_.degree();
        if (n > e) throw StructuralError("laurent_expand: positive powers of hbar present in " + str());
        // num/den = hbar^(n-e) * A(u) / B(u) with u = 1/hbar, A and B the
        // reversed coefficient sequences.
        const std::size_t shift = static_cast<std::size_t>(e - n);
        if (shift > K) return out;
        const std::size_t len = K + 1 - shift;
        const auto& nc = num_.coeffs();
        const auto& dc = den_.coeffs();
        auto A = [&](std::size_t k) { return k <= static_cast<std::size_t>(n) ? nc[n - k] : Rational(0); };
        auto B = [&](std::size_t k) { return k <= static_cast<std::size_t>(e) ? dc[e - k] : Rational(0); };
        std::vector<Rational> s(len);
        const Rational inv_b0 = 1 / B(0);
        for (std::size_t k = 0; k < len; ++k) {
            Rational acc = A(k);
            for (std::size_t j = 1; j <= k; ++j) acc -= B(j) * s[k - j];
            s[k] = acc * inv_b0;
        }
        for (std::size_t k = 0; k < len; ++k) out[k + shift] = s[k];
        return out;
    }

    HbarRational& operator+=(const HbarRational& o) { return *this = *this + o; }
    HbarRational& operator-=(const HbarRational& o) { return *this = *this - o; }
    HbarRational& operator*=(const HbarRational& o) { return *this = *this * o; }
    HbarRational& operator/=(const HbarRational& o) { return *this = *this / o; }

    friend HbarRational operator+(const HbarRational& a, const HbarRational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return HbarRational(a.num_ + b.num_, a.den_);
        QPoly g = gcd(a.den_, b.den_);
        if (g.degree() == 0) return HbarRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        QPoly bg = exact_quotient(b.den_, g);
        QPoly ag = exact_quotient(a.den_, g);
        return HbarRational(a.num_ * bg + b.num_ * ag, a.den_ * bg);
    }
    friend HbarRational operator-(const HbarRational& a) {
        HbarRational r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend HbarRational operator-(const HbarRational& a, const HbarRational& b) { return a + (-b); }
    friend HbarRational operator*(const HbarRational& a, const HbarRational& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) return HbarRational(a.num_ * b.num_);
        // Cross-cancel before multiplying so the final gcd stays small.
        QPoly g1 = gcd(a.num_, b.den_);
        QPoly g2 = gcd(b.num_, a.den_);
        HbarRational r;
        r.num_ = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
        r.den_ = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
        r.fix_sign();
        return r;
    }
    friend HbarRational operator/(const HbarRational& a, const HbarRational& b) {
        if (b.is_zero()) throw DomainError("division by the zero hbar-rational function");
        HbarRational inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        inv.fix_sign();
        return a * inv;
    }
    friend bool operator==(const HbarRational& a, const HbarRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str("h");
        return "(" + num_.str("h") + ")/(" + den_.str("h") + ")";
    }

private:
    // Used when num and den are known coprime: only the monic scaling remains.
    void fix_sign() {
        if (den_.leading() == 1) return;
        const Rational inv = 1 / den_.leading();
        num_ = num_ * QPoly(inv);
        den_ = den_ * QPoly(inv);
    }
    void normalize() {
        if (den_.is_zero()) throw DomainError("hbar-rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(Rational(1));
            return;
        }
        if (den_.degree() > 0) {
            QPoly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = exact_quotient(num_, g);
                den_ = exact_quotient(den_, g);
            }
        }
        fix_sign();
    }

    QPoly num_;
    QPoly den_;
};

inline bool is_zero(const HbarRational& x) { return x.is_zero(); }
inline std::string to_string(const HbarRational& x) { return x.str(); }

// p(x) / (x - root), exact; throws if root is not a root of p.
inline QPoly divide_by_root(const QPoly& p, const Rational& root) {
    const auto& c = p.coeffs();
    if (c.empty()) return p;
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
        carry = c[k] + carry * root;
        q[k - 1] = carry;
    }
    if (c[0] + carry * root != 0) throw DomainError("divide_by_root: not a root");
    return QPoly(std::move(q));
}

// unit * prod (x - root)^mult, a denominator that splits over Q.
struct RootFactored {
    Rational unit = 1;
    std::map<Rational, unsigned> roots;

    QPoly expand() const {
        QPoly p(unit);
        for (const auto& [r, k] : roots)
            for (unsigned j = 0; j < k; ++j) p *= QPoly::linear_root(r);
        return p;
    }
    // den(-x) = unit (-1)^n prod (x + root)^k
    RootFactored reflect() const {
        RootFactored f;
        unsigned total = 0;
        for (const auto& [r, k] : roots) {
            f.roots[-r] = k;
            total += k;
        }
        f.unit = (total % 2) ? Rational(-unit) : unit;
        return f;
    }
    friend RootFactored operator*(RootFactored a, const RootFactored& b) {
        a.unit *= b.unit;
        for (const auto& [r, k] : b.roots) a.roots[r] += k;
        return a;
    }
};

// Splits p over the candidate roots; nullopt if a non-constant part remains.
inline std::optional<RootFactored> factor_over_roots(QPoly p, const std::vector<Rational>& candidates) {
    RootFactored f;
    for (const auto& r : candidates) {
        if (p.degree() <= 0) break;
        if (f.roots.count(r)) continue;
        while (p.degree() > 0 && p.eval(r) == 0) {
            p = divide_by_root(p, r);
            ++f.roots[r];
        }
    }
    if (p.degree() != 0) return std::nullopt;
    f.unit = p.leading();
    return f;
}

// num / den with den kept in split form. Sums of many such terms share a
// least common denominator that is known without any polynomial gcd.
struct FactoredRational {
    QPoly num;
    RootFactored den;

    friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
        return {a.num * b.num, a.den * b.den};
    }
    FactoredRational reflect() const { return {num.reflect(), den.reflect()}; }
};

inline std::optional<FactoredRational> factor_rational(const HbarRational& f, const std::vector<Rational>& candidates) {
    auto d = factor_over_roots(f.den(), candidates);
    if (!d) return std::nullopt;
    return FactoredRational{f.num(), *d};
}

// Least common denominator of split denominators, with the cofactor that
// lifts each one to it.
struct CommonDenominator {
    std::map<Rational, unsigned> lcm;
    std::vector<QPoly> cofactor;
};

inline CommonDenominator common_denominator(const std::vector<RootFactored>& dens) {
    CommonDenominator cd;
    for (const auto& d : dens)
        for (const auto& [r, k] : d.roots) cd.lcm[r] = std::max(cd.lcm[r], k);
    for (const auto& d : dens) {
        QPoly cof(Rational(1) / d.unit);
        for (const auto& [r, k] : cd.lcm) {
            auto it = d.roots.find(r);
            const unsigned have = it == d.roots.end() ? 0U : it->second;
            for (unsigned j = have; j < k; ++j) cof *= QPoly::linear_root(r);
        }
        cd.cofactor.push_back(std::move(cof));
    }
    return cd;
}

// total / prod (x - r)^k in canonical form, cancelling by root tests only.
inline HbarRational reduce_over_roots(QPoly total, std::map<Rational, unsigned> lcm) {
    if (total.is_zero()) return {};
    QPoly den(Rational(1));
    for (auto& [r, k] : lcm) {
        while (k > 0 && total.eval(r) == 0) {
            total = divide_by_root(total, r);
            --k;
        }
        for (unsigned j = 0; j < k; ++j) den *= QPoly::linear_root(r);
    }
    return HbarRational::from_coprime(std::move(total), std::move(den));
}

// Exact sum of split-denominator terms, returned in canonical form.
inline HbarRational sum_factored(const std::vector<FactoredRational>& terms) {
    std::vector<RootFactored> dens;
    for (const auto& t : terms) dens.push_back(t.den);
    const CommonDenominator cd = common_denominator(dens);
    QPoly total;
    for (std::size_t a = 0; a < terms.size(); ++a)
        if (!terms[a].num.is_zero()) total += terms[a].num * cd.cofactor[a];
    return reduce_over_roots(std::move(total), cd.lcm);
}

// Sum of hbar-rational functions; denominators that split over the candidate
// roots go through sum_factored, anything else through pairwise addition.
inline HbarRational hbar_sum(const std::vector<HbarRational>& terms, const std::vector<Rational>& candidates) {
    std::vector<FactoredRational> split;
    HbarRational rest;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        if (auto f = factor_rational(t, candidates))
            split.push_back(std::move(*f));
        else
            rest += t;
    }
    return sum_factored(split) + rest;
}

}  // namespace gwmirror
