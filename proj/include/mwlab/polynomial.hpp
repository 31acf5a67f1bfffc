#pragma once

#include "mwlab/bigint.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mwlab {

// Dense univariate polynomial over a commutative ring T.  Coefficients are
// stored ascending by degree with trailing zeros trimmed; the zero polynomial
// keeps an empty vector and reports degree -1.
template <class T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }

    static Polynomial identity() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }

    bool is_zero() const { return c_.empty(); }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    const std::vector<T>& coeffs() const { return c_; }

    // Coefficient vector padded with zeros up to degree `n` inclusive.
    std::vector<T> coeffs_padded(std::size_t n) const {
        std::vector<T> out = c_;
        out.resize(n + 1, T(0));
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const T& s, const Polynomial& a) {
        std::vector<T> out = a.c_;
        for (auto& v : out) v *= s;
        return Polynomial(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    bool operator==(const Polynomial& other) const { return c_ == other.c_; }

    Polynomial pow(std::uint64_t e) const {
        Polynomial r = constant(T(1));
        Polynomial b = *this;
        while (e != 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Product keeping only terms of degree <= cap.
    static Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, std::size_t cap) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> out(std::min(a.c_.size() + b.c_.size() - 1, cap + 1), T(0));
        for (std::size_t i = 0; i < a.c_.size() && i <= cap; ++i)
            for (std::size_t j = 0; j < b.c_.size() && i + j <= cap; ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

    Polynomial pow_truncated(std::uint64_t e, std::size_t cap) const {
        Polynomial r = constant(T(1));
        Polynomial b = *this;
        while (e != 0) {
            if (e & 1) r = mul_truncated(r, b, cap);
            b = mul_truncated(b, b, cap);
            e >>= 1;
        }
        return r;
    }

    template <class U>
    U eval(const U& x) const {
        U acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;

} // namespace mwlab
