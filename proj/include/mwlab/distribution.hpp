#pragma once

#include "mwlab/bigint.hpp"
#include "mwlab/codes.hpp"
#include "mwlab/enumerators.hpp"
#include "mwlab/errors.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mwlab {

// Finitely supported exact distribution; support order is part of the value.
struct ProbabilityTable {
    std::vector<Word> support;
    std::vector<Rational> probs;
};

namespace detail {

inline void check_open_unit(const Rational& z) {
    if (z <= 0 || z >= 1) throw std::invalid_argument("z must lie in the open interval (0,1)");
}

inline void check_work(const BigInt& work, std::uint64_t budget, const char* what) {
    if (work > BigInt(budget))
        throw budget_error(std::string(what) + " of " + work.str() + " steps exceeds budget " +
                           std::to_string(budget));
}

// S(z) = sum_{w >= 1} dual_coeff_w * t^w with t = (1-z)/(1+(q-1)z).  Defined
// for z in the closed interval [0,1]; the public entry point restricts to the
// open one.
inline Rational gap_sum_from_dual(const WeightEnumerator& dual_w, fq_t q, const Rational& z) {
    Rational t = (1 - z) / (1 + Rational(q - 1) * z);
    return dual_w.eval(t) - Rational(dual_w.coeff(0));
}

inline WeightEnumerator dual_enumerator(const LinearCode& code, std::uint64_t budget) {
    return macwilliams_transform(weight_enumerator(code, budget), BigInt(code.field()->q()),
                                 code.size());
}

} // namespace detail

// p(x) = z^{w(x)} / W_C(z) over the codewords, in enumeration order.
inline ProbabilityTable macwilliams_distribution(const LinearCode& code, const Rational& z,
                                                 std::uint64_t budget = kEnumerationBudget) {
    detail::check_open_unit(z);
    const std::uint32_t n = code.n();
    const BigInt a = boost::multiprecision::numerator(z);
    const BigInt b = boost::multiprecision::denominator(z);
    std::vector<BigInt> apow(n + 1), bpow(n + 1);
    apow[0] = bpow[0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        apow[i] = apow[i - 1] * a;
        bpow[i] = bpow[i - 1] * b;
    }

    // z^w = a^w b^{n-w} / b^n, so the normalizer cancels to integer weights.
    ProbabilityTable table;
    std::vector<BigInt> nums;
    BigInt den = 0;
    code.for_each_codeword(
        [&](const Word& c) {
            std::uint32_t w = hamming_weight(c);
            table.support.push_back(c);
            nums.push_back(apow[w] * bpow[n - w]);
            den += nums.back();
        },
        budget);
    table.probs.reserve(nums.size());
    for (const BigInt& num : nums) table.probs.push_back(make_rational(num, den));
    return table;
}

// g(x) = sum_{c in C} z^{w(x+c)} / (1+(q-1)z)^n over the canonical coset
// transversal.
inline ProbabilityTable coset_distribution(const LinearCode& code, const Rational& z,
                                           std::uint64_t budget = kEnumerationBudget) {
    detail::check_open_unit(z);
    const Field& field = *code.field();
    const std::uint32_t n = code.n();
    detail::check_work(pow_int(BigInt(field.q()), n), budget, "coset mass enumeration");

    const BigInt a = boost::multiprecision::numerator(z);
    const BigInt b = boost::multiprecision::denominator(z);
    std::vector<BigInt> apow(n + 1), bpow(n + 1);
    apow[0] = bpow[0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        apow[i] = apow[i - 1] * a;
        bpow[i] = bpow[i - 1] * b;
    }
    // (1+(q-1)z)^n scaled by b^n: the total mass over all of F_q^n.
    const BigInt den = pow_int(b + BigInt(field.q() - 1) * a, n);

    ProbabilityTable table;
    table.support = code.coset_representatives(budget);
    table.probs.reserve(table.support.size());
    for (const Word& rep : table.support) {
        BigInt num = 0;
        code.for_each_codeword(
            [&](const Word& c) {
                std::uint32_t w = 0;
                for (std::uint32_t j = 0; j < n; ++j)
                    if (field.add(rep[j], c[j]) != 0) ++w;
                num += apow[w] * bpow[n - w];
            },
            budget);
        table.probs.push_back(make_rational(num, den));
    }
    return table;
}

// Uniform distribution on the coset transversal, mass q^{-(n-k)} each.
inline ProbabilityTable uniform_on_cosets(const LinearCode& code,
                                          std::uint64_t budget = kEnumerationBudget) {
    ProbabilityTable table;
    table.support = code.coset_representatives(budget);
    Rational mass = make_rational(1, BigInt(table.support.size()));
    table.probs.assign(table.support.size(), mass);
    return table;
}

// Delta(P, Q) = (1/2) sum |P(a) - Q(a)| over a shared support.
inline Rational statistical_distance(const ProbabilityTable& p, const ProbabilityTable& q) {
    if (p.support != q.support) throw std::invalid_argument("distribution support mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        Rational d = p.probs[i] - q.probs[i];
        acc += d < 0 ? -d : d;
    }
    return acc / 2;
}

// S(z) = sum over nonzero dual codewords of t^{w}, t = (1-z)/(1+(q-1)z).
inline Rational dual_gap_sum(const LinearCode& code, const Rational& z,
                             std::uint64_t budget = kEnumerationBudget) {
    detail::check_open_unit(z);
    return detail::gap_sum_from_dual(detail::dual_enumerator(code, budget), code.field()->q(), z);
}

struct SmoothingResult {
    Rational eta;
    Rational lo, hi; // S(lo) >= epsilon >= S(hi); hi - lo <= tol
    Rational epsilon;
    Rational tol;
};

// Threshold z* = inf{z in (0,1) : S(z) < epsilon} by bisection on the
// strictly decreasing S.  Degenerate case: S(0) = |C_dual| - 1 <= epsilon
// already, so the threshold is 0 and the bracket collapses.
inline SmoothingResult smoothing_parameter(const LinearCode& code, const Rational& epsilon,
                                           const Rational& tol,
                                           std::uint64_t budget = kEnumerationBudget) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    if (tol <= 0 || tol >= 1) throw std::invalid_argument("tolerance must lie in (0,1)");
    WeightEnumerator dual_w = detail::dual_enumerator(code, budget);
    const fq_t q = code.field()->q();

    if (Rational(dual_w.total() - 1) <= epsilon)
        return SmoothingResult{0, 0, 0, epsilon, tol};

    Rational lo = 0, hi = 1;
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (detail::gap_sum_from_dual(dual_w, q, mid) >= epsilon)
            lo = mid;
        else
            hi = mid;
    }
    return SmoothingResult{(lo + hi) / 2, lo, hi, epsilon, tol};
}

// max(0, ((q^{n-k}/(1+eps))^{1/n} - 1) / (q-1)), with the real n-th root
// replaced by a denominator-2^64 lower approximation so the returned value
// never exceeds the true bound.
inline Rational smoothing_lower_bound(const LinearCode& code, const Rational& epsilon) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    const std::uint32_t n = code.n();
    Rational x = Rational(pow_int(BigInt(code.field()->q()), n - code.k())) / (1 + epsilon);
    BigInt scaled = boost::multiprecision::numerator(x) << (64 * n);
    scaled /= boost::multiprecision::denominator(x);
    BigInt root = floor_nth_root(scaled, n); // root / 2^64 <= x^{1/n}
    BigInt one = BigInt(1) << 64;
    if (root <= one) return 0;
    return make_rational(root - one, one * (code.field()->q() - 1));
}

struct CosetUniformityReport {
    Rational delta; // Delta(D_C, U) over the transversal
    Rational bound; // S(z)/2
    bool pass = false;
};

// Exact check of the statistical-distance bound Delta(D_C, U) <= S(z)/2.
inline CosetUniformityReport verify_coset_uniformity(const LinearCode& code, const Rational& z,
                                                     std::uint64_t budget = kEnumerationBudget) {
    Rational delta =
        statistical_distance(coset_distribution(code, z, budget), uniform_on_cosets(code, budget));
    Rational bound = dual_gap_sum(code, z, budget) / 2;
    return CosetUniformityReport{delta, bound, delta <= bound};
}

} // namespace mwlab
