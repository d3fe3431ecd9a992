#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gwmirror/errors.hpp>
#include <gwmirror/rational.hpp>

namespace gwmirror {

// a_0 + a_1 H + ... + a_{N-1} H^{N-1} in R[H]/(H^N). N is the nilpotency
// order: H^N = 0 exactly.
template <typename R>
class HTruncPoly {
public:
    explicit HTruncPoly(std::size_t nilpotency) : coeffs_(nilpotency, R(0)) {
        if (nilpotency == 0) throw StructuralError("HTruncPoly: nilpotency order must be >= 1");
    }
    HTruncPoly(std::size_t nilpotency, std::vector<R> c) : coeffs_(std::move(c)) {
        if (nilpotency == 0) throw StructuralError("HTruncPoly: nilpotency order must be >= 1");
        coeffs_.resize(nilpotency, R(0));
    }

    static HTruncPoly constant(std::size_t nilpotency, R c) {
        HTruncPoly p(nilpotency);
        p.coeffs_[0] = std::move(c);
        return p;
    }
    // a + b H
    static HTruncPoly linear(std::size_t nilpotency, R a, R b) {
        HTruncPoly p(nilpotency);
        p.coeffs_[0] = std::move(a);
        if (nilpotency > 1) p.coeffs_[1] = std::move(b);
        return p;
    }

    std::size_t nilpotency() const { return coeffs_.size(); }
    const R& operator[](std::size_t i) const { return coeffs_.at(i); }
    R& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    friend HTruncPoly operator+(HTruncPoly a, const HTruncPoly& b) {
        a.check(b);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return a;
    }
    friend HTruncPoly operator-(HTruncPoly a, const HTruncPoly& b) {
        a.check(b);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return a;
    }
    friend HTruncPoly operator*(const HTruncPoly& a, const HTruncPoly& b) {
        a.check(b);
        const std::size_t N = a.coeffs_.size();
        HTruncPoly r(N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; i + j < N; ++j) r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return r;
    }
    HTruncPoly& operator*=(const HTruncPoly& o) { return *this = *this * o; }
    friend bool operator==(const HTruncPoly& a, const HTruncPoly& b) { return a.coeffs_ == b.coeffs_; }

    HTruncPoly pow(unsigned n) const {
        HTruncPoly r = constant(nilpotency(), R(1));
        for (unsigned k = 0; k < n; ++k) r *= *this;
        return r;
    }

    // Inverse of an element with invertible constant term: a0^-1 sum (-n/a0)^k
    // where n is the nilpotent part.
    HTruncPoly inverse() const {
        using gwmirror::is_zero;
        if (is_zero(coeffs_[0])) throw DomainError("HTruncPoly::inverse: constant term not invertible");
        const std::size_t N = nilpotency();
        const R inv0 = R(1) / coeffs_[0];
        HTruncPoly r(N);
        r.coeffs_[0] = inv0;
        for (std::size_t n = 1; n < N; ++n) {
            R acc(0);
            for (std::size_t k = 1; k <= n; ++k) acc = acc + coeffs_[k] * r.coeffs_[n - k];
            r.coeffs_[n] = R(0) - acc * inv0;
        }
        return r;
    }

private:
    void check(const HTruncPoly& o) const {
        if (o.nilpotency() != nilpotency()) throw StructuralError("HTruncPoly nilpotency mismatch");
    }

    std::vector<R> coeffs_;
};

}  // namespace gwmirror
