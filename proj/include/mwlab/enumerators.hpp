#pragma once

#include "mwlab/bigint.hpp"
#include "mwlab/codes.hpp"
#include "mwlab/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mwlab {

// Weight enumerator of a set of length-n objects: coeffs[w] counts members of
// weight w.  Counts are nonnegative and sum to the set size.
class WeightEnumerator {
public:
    explicit WeightEnumerator(std::uint32_t n) : n_(n), a_(n + 1, BigInt(0)) {
        if (n == 0) throw std::invalid_argument("enumerator length must be positive");
    }

    WeightEnumerator(std::uint32_t n, std::vector<BigInt> coeffs) : WeightEnumerator(n) {
        if (coeffs.size() != a_.size())
            throw std::invalid_argument("enumerator needs exactly n+1 coefficients");
        for (const BigInt& c : coeffs)
            if (c < 0) throw std::invalid_argument("enumerator coefficient is negative");
        a_ = std::move(coeffs);
    }

    std::uint32_t n() const { return n_; }
    const std::vector<BigInt>& coeffs() const { return a_; }
    const BigInt& coeff(std::uint32_t w) const { return a_.at(w); }
    BigInt& coeff(std::uint32_t w) { return a_.at(w); }

    BigInt total() const {
        BigInt s = 0;
        for (const BigInt& c : a_) s += c;
        return s;
    }

    // W(z) = sum_w coeffs[w] z^w
    Rational eval(const Rational& z) const {
        Rational acc = 0;
        for (std::size_t i = a_.size(); i-- > 0;) acc = acc * z + Rational(a_[i]);
        return acc;
    }

    bool operator==(const WeightEnumerator& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    std::uint32_t n_;
    std::vector<BigInt> a_;
};

// W(X, Y) = sum_w coeffs[w] X^{n-w} Y^w
inline Rational homogeneous_eval(const WeightEnumerator& w, const Rational& x, const Rational& y) {
    std::vector<Rational> xp(w.n() + 1), yp(w.n() + 1);
    xp[0] = yp[0] = 1;
    for (std::uint32_t i = 1; i <= w.n(); ++i) {
        xp[i] = xp[i - 1] * x;
        yp[i] = yp[i - 1] * y;
    }
    Rational acc = 0;
    for (std::uint32_t i = 0; i <= w.n(); ++i) acc += Rational(w.coeff(i)) * yp[i] * xp[w.n() - i];
    return acc;
}

inline WeightEnumerator weight_enumerator(const LinearCode& code,
                                          std::uint64_t budget = kEnumerationBudget) {
    WeightEnumerator w(code.n());
    code.for_each_codeword([&](const Word& c) { w.coeff(hamming_weight(c)) += 1; }, budget);
    return w;
}

// Enumerator of the m x n matrices of a code tuple by effective length: the
// number of nonzero columns.
inline WeightEnumerator effective_length_enumerator(const CodeTuple& tuple,
                                                    std::uint64_t budget = kEnumerationBudget) {
    WeightEnumerator w(tuple.n());
    tuple.for_each_matrix([&](const CodeMatrix& x) { w.coeff(effective_length_weight(x)) += 1; },
                          budget);
    return w;
}

// Dual enumerator from a primal one:
//   B(z) = (1/size) * sum_w A_w (1 - z)^w (1 + (q_eff - 1) z)^{n - w},
// where q_eff is the alphabet size (q for codes, q^m for m-row tuples) and
// size the number of enumerated objects.  Division must be exact; a remainder
// means the input was not the enumerator of a set of that size.
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& w, const BigInt& q_eff,
                                              const BigInt& size) {
    if (q_eff < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (size <= 0) throw std::invalid_argument("set size must be positive");
    const std::uint32_t n = w.n();

    IntPolynomial one_minus({BigInt(1), BigInt(-1)});
    IntPolynomial one_plus({BigInt(1), q_eff - 1});
    std::vector<IntPolynomial> a_pow(n + 1), b_pow(n + 1);
    a_pow[0] = b_pow[0] = IntPolynomial::constant(BigInt(1));
    for (std::uint32_t i = 1; i <= n; ++i) {
        a_pow[i] = a_pow[i - 1] * one_minus;
        b_pow[i] = b_pow[i - 1] * one_plus;
    }

    IntPolynomial acc;
    for (std::uint32_t i = 0; i <= n; ++i) {
        if (w.coeff(i) == 0) continue;
        acc += w.coeff(i) * (a_pow[i] * b_pow[n - i]);
    }

    std::vector<BigInt> out = acc.coeffs_padded(n);
    for (BigInt& c : out) {
        BigInt quot, rem;
        boost::multiprecision::divide_qr(c, size, quot, rem);
        if (rem != 0)
            throw std::invalid_argument(
                "transform coefficient not divisible by the set size; "
                "input is not the enumerator of such a set");
        if (quot < 0)
            throw std::invalid_argument(
                "transform produced a negative count; input is not a weight enumerator");
        c = quot;
    }
    return WeightEnumerator(n, std::move(out));
}

struct MacWilliamsCheck {
    WeightEnumerator primal;
    WeightEnumerator transformed; // transform applied to primal
    WeightEnumerator direct;      // dual enumerated by brute force
    bool equal = false;
};

// Checks the transform of the tuple's effective-length enumerator against
// brute-force enumeration of the dual tuple.
inline MacWilliamsCheck verify_macwilliams(const CodeTuple& tuple,
                                           std::uint64_t budget = kEnumerationBudget) {
    WeightEnumerator primal = effective_length_enumerator(tuple, budget);
    BigInt q_eff = pow_int(BigInt(tuple.field()->q()), tuple.m());
    WeightEnumerator transformed = macwilliams_transform(primal, q_eff, tuple.size());
    WeightEnumerator direct = effective_length_enumerator(tuple.dual(), budget);
    bool equal = transformed == direct;
    return MacWilliamsCheck{std::move(primal), std::move(transformed), std::move(direct), equal};
}

inline MacWilliamsCheck verify_macwilliams(const LinearCode& code,
                                           std::uint64_t budget = kEnumerationBudget) {
    return verify_macwilliams(CodeTuple({code}), budget);
}

} // namespace mwlab
