#pragma once

#include "mwlab/bigint.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mwlab {

// Element of Z[zeta_p] (or Q[zeta_p]) for a prime p, stored as coefficients
// of 1, zeta, ..., zeta^{p-1}.  The single relation 1 + zeta + ... +
// zeta^{p-1} = 0 is quotiented out by keeping the last coefficient at zero;
// every operation restores that canonical form, so equality is coefficient
// equality.
template <class T>
class Cyclotomic {
public:
    explicit Cyclotomic(std::uint32_t p) : p_(check_order(p)), c_(p, T(0)) {}

    static Cyclotomic constant(std::uint32_t p, T v) {
        Cyclotomic r(p);
        r.c_[0] = std::move(v);
        r.reduce();
        return r;
    }

    // zeta_p^k
    static Cyclotomic root_power(std::uint32_t p, std::uint64_t k) {
        Cyclotomic r(p);
        r.c_[k % p] = T(1);
        r.reduce();
        return r;
    }

    // Coefficients of 1, zeta, ..., at most p of them; canonicalized.
    static Cyclotomic from_coeffs(std::uint32_t p, std::vector<T> coeffs) {
        if (coeffs.size() > p) throw std::invalid_argument("too many cyclotomic coefficients");
        Cyclotomic r(p);
        for (std::size_t i = 0; i < coeffs.size(); ++i) r.c_[i] = std::move(coeffs[i]);
        r.reduce();
        return r;
    }

    std::uint32_t order() const { return p_; }

    const std::vector<T>& coeffs() const { return c_; }

    const T& coeff(std::size_t i) const { return c_.at(i); }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != T(0)) return false;
        return true;
    }

    bool operator==(const Cyclotomic& other) const { return p_ == other.p_ && c_ == other.c_; }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check_same(o);
        for (std::uint32_t i = 0; i < p_; ++i) c_[i] += o.c_[i];
        reduce();
        return *this;
    }

    Cyclotomic& operator-=(const Cyclotomic& o) {
        check_same(o);
        for (std::uint32_t i = 0; i < p_; ++i) c_[i] -= o.c_[i];
        reduce();
        return *this;
    }

    Cyclotomic& operator*=(const Cyclotomic& o) {
        check_same(o);
        std::vector<T> out(p_, T(0));
        for (std::uint32_t i = 0; i < p_; ++i) {
            if (c_[i] == T(0)) continue;
            for (std::uint32_t j = 0; j < p_; ++j) {
                if (o.c_[j] == T(0)) continue;
                out[(i + j) % p_] += c_[i] * o.c_[j];
            }
        }
        c_ = std::move(out);
        reduce();
        return *this;
    }

    Cyclotomic& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }

    // Multiply by zeta^t: an index rotation, no coefficient arithmetic.
    Cyclotomic rotated(std::uint64_t t) const {
        Cyclotomic r(p_);
        std::uint32_t shift = static_cast<std::uint32_t>(t % p_);
        for (std::uint32_t i = 0; i < p_; ++i) r.c_[(i + shift) % p_] = c_[i];
        r.reduce();
        return r;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(const T& s, Cyclotomic a) { return a *= s; }

    Cyclotomic operator-() const {
        Cyclotomic r(p_);
        for (std::uint32_t i = 0; i < p_; ++i) r.c_[i] = -c_[i];
        return r;
    }

    std::complex<double> to_complex() const {
        const double tau = 6.283185307179586476925286766559;
        std::complex<double> acc(0.0, 0.0);
        for (std::uint32_t i = 0; i < p_; ++i) {
            if (c_[i] == T(0)) continue;
            double x = coefficient_to_double(c_[i]);
            double ang = tau * static_cast<double>(i) / static_cast<double>(p_);
            acc += x * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return acc;
    }

private:
    static std::uint32_t check_order(std::uint32_t p) {
        if (p < 2) throw std::invalid_argument("cyclotomic order must be a prime >= 2");
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("cyclotomic order must be prime");
        return p;
    }

    void check_same(const Cyclotomic& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    }

    void reduce() {
        if (c_[p_ - 1] == T(0)) return;
        T last = c_[p_ - 1];
        for (auto& v : c_) v -= last;
    }

    static double coefficient_to_double(const BigInt& v) { return v.convert_to<double>(); }
    static double coefficient_to_double(const Rational& v) { return v.convert_to<double>(); }

    std::uint32_t p_;
    std::vector<T> c_;
};

using CycInt = Cyclotomic<BigInt>;
using CycRat = Cyclotomic<Rational>;

inline CycRat to_rational(const CycInt& v) {
    std::vector<Rational> c(v.order());
    for (std::uint32_t i = 0; i < v.order(); ++i) c[i] = Rational(v.coeff(i));
    return CycRat::from_coeffs(v.order(), std::move(c));
}

} // namespace mwlab
