#pragma once

#include "mwlab/bigint.hpp"
#include "mwlab/codes.hpp"
#include "mwlab/enumerators.hpp"
#include "mwlab/errors.hpp"
#include "mwlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mwlab {

// mod-2 construction: A(C) = {x in Z^n : x mod 2 in C} for a binary code C,
// and its dual realized as (1/2)A(C_dual).  `scale` distinguishes the two
// forms; enumeration always happens on the underlying integer grid x/scale.
class ConstructionALattice {
public:
    static ConstructionALattice from_code(const LinearCode& code) {
        if (code.field()->q() != 2)
            throw std::invalid_argument("construction A requires a binary code");
        ConstructionALattice lat;
        lat.code_ = code;
        lat.scale_ = 1;
        lat.det_ = Rational(pow_int(BigInt(2), code.n() - code.k()));
        return lat;
    }

    const LinearCode& code() const { return *code_; }
    std::uint32_t n() const { return code_->n(); }
    const Rational& scale() const { return scale_; }
    const Rational& det() const { return det_; }
    bool is_dual_form() const { return scale_ != 1; }

    // (1/2)A(C_dual); determinant inverts exactly.
    ConstructionALattice dual() const {
        if (is_dual_form())
            throw std::invalid_argument("lattice is already in dual form; dualize the primal");
        ConstructionALattice lat;
        lat.code_ = code_->dual();
        lat.scale_ = make_rational(1, 2);
        lat.det_ = 1 / det_;
        return lat;
    }

    // Membership on the integer grid (scale 1 only): parity word lies in C.
    bool contains(const std::vector<long long>& x) const {
        if (is_dual_form())
            throw std::invalid_argument("membership test expects the integer-grid form");
        if (x.size() != n()) throw std::invalid_argument("point dimension mismatch");
        Word w(n());
        for (std::uint32_t i = 0; i < n(); ++i) w[i] = static_cast<fq_t>(((x[i] % 2) + 2) % 2);
        return code_->contains(w);
    }

private:
    ConstructionALattice() = default;

    std::optional<LinearCode> code_;
    Rational scale_;
    Rational det_;
};

// Truncated shell count sequence: counts[m] points at distance m (L1 norm or
// squared Euclidean norm, per producing operation) on the underlying grid.
// tail_bound is present when the truncation was chosen for an evaluation
// point and bounds the discarded mass there.
struct SeriesTruncation {
    std::uint32_t radius = 0;
    std::vector<BigInt> counts;
    std::optional<Rational> tail_bound;
};

namespace detail {

// One-dimensional L1 shell counts by parity: an even coordinate contributes
// [1, 0, 2, 0, 2, ...], an odd one [0, 2, 0, 2, ...].
inline IntPolynomial parity_shell_poly(bool odd, std::uint32_t radius) {
    std::vector<BigInt> c(radius + 1, BigInt(0));
    for (std::uint32_t j = odd ? 1 : 0; j <= radius; j += 2) c[j] = (j == 0) ? 1 : 2;
    return IntPolynomial(std::move(c));
}

// L1 shell counts of A(C) up to `radius`, grouping codewords by weight: a
// word of weight w fixes w odd coordinates, so its pattern class contributes
// odd^w * even^{n-w}.
inline std::vector<BigInt> l1_shell_counts(const LinearCode& code, std::uint32_t radius,
                                           std::uint64_t budget) {
    const std::uint32_t n = code.n();
    WeightEnumerator wc = weight_enumerator(code, budget);
    IntPolynomial even = parity_shell_poly(false, radius);
    IntPolynomial odd = parity_shell_poly(true, radius);

    std::vector<IntPolynomial> even_pow(n + 1), odd_pow(n + 1);
    even_pow[0] = odd_pow[0] = IntPolynomial::constant(BigInt(1));
    for (std::uint32_t i = 1; i <= n; ++i) {
        even_pow[i] = IntPolynomial::mul_truncated(even_pow[i - 1], even, radius);
        odd_pow[i] = IntPolynomial::mul_truncated(odd_pow[i - 1], odd, radius);
    }

    IntPolynomial acc;
    for (std::uint32_t w = 0; w <= n; ++w) {
        if (wc.coeff(w) == 0) continue;
        acc += wc.coeff(w) * IntPolynomial::mul_truncated(odd_pow[w], even_pow[n - w], radius);
    }
    return acc.coeffs_padded(radius);
}

// L1 shell counts of Z^n up to `radius` (majorant for every scale-1 lattice
// here): n-fold truncated power of [1, 2, 2, 2, ...].
inline std::vector<BigInt> zn_shell_counts(std::uint32_t n, std::uint32_t radius) {
    std::vector<BigInt> one(radius + 1, BigInt(2));
    one[0] = 1;
    return IntPolynomial(std::move(one)).pow_truncated(n, radius).coeffs_padded(radius);
}

inline void check_unit_interval(const Rational& z, bool allow_zero) {
    if (z < 0 || z >= 1 || (!allow_zero && z == 0))
        throw std::invalid_argument("series parameter must lie in [0,1)");
}

} // namespace detail

// Shell counts N_m = #{x : |x|_1 = m} on the underlying integer grid, m <= R.
// The budget covers the modeled enumeration work: the L1 ball volume of Z^n
// at radius R plus the codeword walk.
inline SeriesTruncation lattice_enumerate_l1(const ConstructionALattice& lat, std::uint32_t radius,
                                             std::uint64_t budget = kEnumerationBudget) {
    std::vector<BigInt> ball = detail::zn_shell_counts(lat.n(), radius);
    BigInt volume = 0;
    for (const BigInt& c : ball) volume += c;
    if (volume > BigInt(budget))
        throw budget_error("L1 ball volume " + volume.str() + " exceeds budget " +
                           std::to_string(budget));
    SeriesTruncation out;
    out.radius = radius;
    out.counts = detail::l1_shell_counts(lat.code(), radius, budget);
    return out;
}

// nu_{A(C)}(z) = W_C((1+z^2)/(1-z^2), 2z/(1-z^2)) exactly.
inline Rational nu_closed_form(const LinearCode& code, const Rational& z,
                               std::uint64_t budget = kEnumerationBudget) {
    if (code.field()->q() != 2) throw std::invalid_argument("nu series requires a binary code");
    detail::check_unit_interval(z, true);
    Rational z2 = z * z;
    return homogeneous_eval(weight_enumerator(code, budget), (1 + z2) / (1 - z2),
                            2 * z / (1 - z2));
}

// Partial sum of nu_{A(C)}(z) with the discarded tail bounded through the
// Z^n majorant: tail = ((1+z)/(1-z))^n minus its own truncation, exact.
inline std::pair<Rational, Rational> nu_truncated(const ConstructionALattice& lat,
                                                  const Rational& z, const Rational& tol,
                                                  std::uint64_t budget = kEnumerationBudget) {
    if (lat.is_dual_form())
        throw std::invalid_argument(
            "nu truncation runs on the integer-grid form; use the dual code's lattice");
    if (z >= 1) throw std::invalid_argument("nu series diverges for z >= 1");
    detail::check_unit_interval(z, true);
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    const std::uint32_t n = lat.n();

    if (z == 0) return {1, 0};

    const Rational closed_zn = pow_rational((1 + z) / (1 - z), n);
    std::uint32_t radius = 8;
    constexpr std::uint32_t kMaxRadius = 1u << 14;
    while (true) {
        std::vector<BigInt> zn = detail::zn_shell_counts(n, radius);
        Rational partial_zn = 0, zpow = 1;
        for (std::uint32_t m = 0; m <= radius; ++m, zpow *= z) partial_zn += Rational(zn[m]) * zpow;
        Rational tail = closed_zn - partial_zn;
        if (tail <= tol) {
            std::vector<BigInt> counts = detail::l1_shell_counts(lat.code(), radius, budget);
            Rational value = 0;
            zpow = 1;
            for (std::uint32_t m = 0; m <= radius; ++m, zpow *= z)
                value += Rational(counts[m]) * zpow;
            return {value, tail};
        }
        if (radius >= kMaxRadius)
            throw budget_error("tolerance unreachable within truncation radius " +
                               std::to_string(kMaxRadius));
        radius *= 2;
    }
}

// nu_{A(C)^*}(t^2) = nu_{A(C_dual)}(t): the dual's series evaluated on the
// integer grid after the 2L <-> L rescaling.
inline Rational dual_lattice_nu(const LinearCode& code, const Rational& t,
                                std::uint64_t budget = kEnumerationBudget) {
    if (code.field()->q() != 2) throw std::invalid_argument("nu series requires a binary code");
    detail::check_unit_interval(t, true);
    return nu_closed_form(code.dual(), t, budget);
}

// u = tanh(beta) and v = tanh(alpha) for the coupled parameters with
// exp(-2*beta) = tanh(alpha): a Moebius involution on (0,1).
struct ParameterPair {
    Rational u;
    Rational v;
};

inline ParameterPair beta_alpha_relation(const Rational& u) {
    if (u <= 0 || u >= 1) throw std::invalid_argument("u outside (0,1)");
    return ParameterPair{u, (1 - u) / (1 + u)};
}

// Exact rational form of the nu-duality identity: for u = tanh(beta),
//   sum_{c in C_dual} u^{w(c)} = det(A(C)) ((1+u)/2)^n sum_{c in C} v^{w(c)},
// v = (1-u)/(1+u).  All half-integer powers cancel algebraically, so the
// difference of the two sides is an exact rational; it must be zero.  The
// left side is enumerated from the dual code directly, not transformed.
inline Rational nu_duality_residual(const LinearCode& code, const Rational& u,
                                    std::uint64_t budget = kEnumerationBudget) {
    if (code.field()->q() != 2)
        throw std::invalid_argument("nu duality requires a binary code");
    if (u <= 0 || u >= 1) throw std::invalid_argument("u outside (0,1)");
    const std::uint32_t n = code.n();
    Rational v = beta_alpha_relation(u).v;

    Rational lhs = weight_enumerator(code.dual(), budget).eval(u);
    Rational det(pow_int(BigInt(2), n - code.k()));
    Rational rhs = det * pow_rational((1 + u) / 2, n) * weight_enumerator(code, budget).eval(v);
    return lhs - rhs;
}

struct NuDualityNumericReport {
    double lhs = 0, rhs = 0;
    double residual = 0;
    double lhs_tail = 0, rhs_tail = 0; // scaled truncation bounds per side
    double combined_tail = 0;
    std::uint32_t radius = 0;
    bool pass = false;
};

// Floating-point form of the same identity, stated with hyperbolic
// parameters:
//   2^{n/2} nu_{Lambda*}(tanh^2(beta/2))
//     = det(Lambda) (sinh 2 beta)^{n/2} nu_Lambda(tanh(alpha/2)),
// with tanh(alpha) = exp(-2 beta).  Both series are truncated on the integer
// grid (the dual side via nu_{Lambda*}(t^2) = nu_{A(C_dual)}(t)) and the Z^n
// closed form bounds each discarded tail.
inline NuDualityNumericReport nu_duality_numeric(const LinearCode& code, double beta, double tol,
                                                 std::uint64_t budget = kEnumerationBudget) {
    if (code.field()->q() != 2)
        throw std::invalid_argument("nu duality requires a binary code");
    if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const std::uint32_t n = code.n();

    const double t_dual = std::tanh(beta / 2);
    const double alpha = std::atanh(std::exp(-2 * beta));
    const double t_primal = std::tanh(alpha / 2);

    const double lhs_factor = std::pow(2.0, n / 2.0);
    const double det = std::pow(2.0, double(n - code.k()));
    const double rhs_factor = det * std::pow(std::sinh(2 * beta), n / 2.0);

    // Tail of sum_{m>R} N_m t^m over the Z^n shell counts, bounded forward:
    // N_{m+1}/N_m <= m/(m-n+1) for m >= n and the ratio decreases, so past
    // the cut the series is dominated by a geometric one.  A closed-form
    // difference would cancel below the true tail in doubles.
    auto zn_tail = [n](const std::vector<BigInt>& zn, std::uint32_t radius, double t) {
        if (radius + 1 < n) return std::numeric_limits<double>::infinity();
        double rho = t * double(radius + 1) / double(radius + 2 - n);
        if (!(rho < 1)) return std::numeric_limits<double>::infinity();
        double head = zn[radius + 1].convert_to<double>() * std::pow(t, double(radius + 1));
        return head / (1 - rho) * (1 + 1e-12);
    };

    std::vector<BigInt> dual_counts, primal_counts, zn;
    std::uint32_t radius = 16;
    constexpr std::uint32_t kMaxRadius = 1u << 12;
    double lhs_tail = 0, rhs_tail = 0;
    while (true) {
        zn = detail::zn_shell_counts(n, radius + 1);
        lhs_tail = lhs_factor * zn_tail(zn, radius, t_dual);
        rhs_tail = rhs_factor * zn_tail(zn, radius, t_primal);
        if (lhs_tail + rhs_tail <= tol * 1e-2) break;
        if (radius >= kMaxRadius) {
            if (lhs_tail + rhs_tail <= tol) break;
            throw budget_error("truncation tolerance unreachable within radius " +
                               std::to_string(kMaxRadius));
        }
        radius *= 2;
    }

    dual_counts = detail::l1_shell_counts(code.dual(), radius, budget);
    primal_counts = detail::l1_shell_counts(code, radius, budget);
    double sum_dual = 0, sum_primal = 0, zd = 1, zp = 1;
    for (std::uint32_t m = 0; m <= radius; ++m, zd *= t_dual, zp *= t_primal) {
        sum_dual += dual_counts[m].convert_to<double>() * zd;
        sum_primal += primal_counts[m].convert_to<double>() * zp;
    }

    NuDualityNumericReport rep;
    rep.lhs = lhs_factor * sum_dual;
    rep.rhs = rhs_factor * sum_primal;
    rep.residual = std::fabs(rep.lhs - rep.rhs);
    rep.lhs_tail = lhs_tail;
    rep.rhs_tail = rhs_tail;
    rep.combined_tail = lhs_tail + rhs_tail;
    rep.radius = radius;
    rep.pass = rep.residual <= rep.combined_tail + 1e-9;
    return rep;
}

struct ThetaRelationReport {
    std::vector<BigInt> lattice_counts; // points of A(C) per squared norm
    std::vector<BigInt> series_counts;  // coefficients of the substituted series
    bool equal = false;
};

// Squared-norm generating identity: the counts of A(C) points with |x|^2 = j
// match W_C(theta_even, theta_odd) where theta_even = sum q^{4m^2} and
// theta_odd = sum q^{(2m+1)^2}.  The left side walks actual points, the
// right substitutes formal series.
inline ThetaRelationReport theta_relation_check(const LinearCode& code, std::uint32_t order,
                                                std::uint64_t budget = kEnumerationBudget) {
    if (code.field()->q() != 2)
        throw std::invalid_argument("theta relation requires a binary code");
    if (order > budget) throw budget_error("series order exceeds budget");
    const std::uint32_t n = code.n();

    // Box volume guard: the walk below visits at most (2 floor(sqrt(M)) + 1)^n
    // points.
    const std::uint32_t side = 2 * static_cast<std::uint32_t>(std::sqrt(double(order))) + 1;
    BigInt box = pow_int(BigInt(side), n);
    if (box > BigInt(budget))
        throw budget_error("theta enumeration box of " + box.str() + " points exceeds budget " +
                           std::to_string(budget));

    ThetaRelationReport rep;
    rep.lattice_counts.assign(order + 1, BigInt(0));

    // DFS over coordinates with the running squared norm as the pruning
    // bound; the parity word is tested at the leaves.
    Word parity(n, 0);
    auto isqrt = [](std::uint32_t v) {
        auto r = static_cast<long long>(std::sqrt(double(v)));
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r;
    };
    auto walk = [&](auto&& self, std::uint32_t i, std::uint32_t norm) -> void {
        if (i == n) {
            if (code.contains(parity)) rep.lattice_counts[norm] += 1;
            return;
        }
        const std::uint32_t room = order - norm;
        const long long bound = isqrt(room);
        for (long long x = -bound; x <= bound; ++x) {
            parity[i] = static_cast<fq_t>(((x % 2) + 2) % 2);
            self(self, i + 1, norm + static_cast<std::uint32_t>(x * x));
        }
    };
    walk(walk, 0, 0);

    // theta_{2Z}: q^{(2m)^2}; theta_{2Z+1}: q^{(2m+1)^2}; both coset series
    // of the even/odd integers under |x|^2.
    std::vector<BigInt> even(order + 1, BigInt(0)), odd(order + 1, BigInt(0));
    even[0] = 1;
    for (std::uint32_t m = 1; 4ull * m * m <= order; ++m) even[4 * m * m] = 2;
    for (std::uint32_t m = 0; (2ull * m + 1) * (2 * m + 1) <= order; ++m)
        odd[(2 * m + 1) * (2 * m + 1)] = 2;
    IntPolynomial even_p{std::vector<BigInt>(even)}, odd_p{std::vector<BigInt>(odd)};

    WeightEnumerator wc = weight_enumerator(code, budget);
    IntPolynomial acc;
    for (std::uint32_t w = 0; w <= n; ++w) {
        if (wc.coeff(w) == 0) continue;
        IntPolynomial term = IntPolynomial::mul_truncated(odd_p.pow_truncated(w, order),
                                                          even_p.pow_truncated(n - w, order), order);
        acc += wc.coeff(w) * term;
    }
    rep.series_counts = acc.coeffs_padded(order);
    rep.equal = rep.lattice_counts == rep.series_counts;
    return rep;
}

struct JacobiPoissonReport {
    double lhs = 0;        // sum over the dual lattice of exp(-pi t |x|^2)
    double rhs = 0;        // det * t^{-n/2} * sum over the lattice of exp(-pi |x|^2 / t)
    double residual = 0;
    double tail_bound = 0; // combined truncation tails, already scaled
    std::uint32_t box_bound = 0;
    bool pass = false;
};

namespace detail {

// sum_{x in A(D)} exp(-pi tau |x|^2) truncated to |x_i| <= bound, grouped by
// codeword weight: odd coordinates draw from the odd integers, even from the
// even ones.  Returns the partial sum and an upper bound on the discarded
// mass (per-coordinate geometric majorant, both signs).
inline std::pair<double, double> gaussian_sum(const LinearCode& code, double tau,
                                              std::uint32_t bound, std::uint64_t budget) {
    const std::uint32_t n = code.n();
    double s_even = 1, s_odd = 0;
    for (std::uint32_t j = 1; j <= bound; ++j) {
        double term = 2 * std::exp(-3.14159265358979323846 * tau * j * j);
        (j % 2 == 0 ? s_even : s_odd) += term;
    }
    const double pi = 3.14159265358979323846;
    const double tail1 = 2 * std::exp(-pi * tau * bound * bound) /
                         (1 - std::exp(-pi * tau * (2.0 * bound + 1)));

    WeightEnumerator wc = weight_enumerator(code, budget);
    double total = 0, size = 0;
    for (std::uint32_t w = 0; w <= n; ++w) {
        if (wc.coeff(w) == 0) continue;
        double a = wc.coeff(w).convert_to<double>();
        size += a;
        total += a * std::pow(s_odd, double(w)) * std::pow(s_even, double(n - w));
    }
    // Mean value bound on the discarded mass: per codeword each coordinate
    // product moves by at most n*tail1*(smax+tail1)^{n-1}.  Computed as a
    // forward product so it stays an upper bound; a difference of the two
    // near-equal totals would cancel below the true tail.
    double smax = std::max(s_even, s_odd) + tail1;
    double tail = size * n * tail1 * std::pow(smax, double(n - 1)) * (1 + 1e-12);
    return {total, tail};
}

} // namespace detail

// Gaussian-sum form of the dual summation identity at purely imaginary
// argument:
//   sum_{x in Lambda*} exp(-pi t |x|^2)
//     = det(Lambda) t^{-n/2} sum_{x in Lambda} exp(-pi |x|^2 / t).
// Both sides reduce to integer-grid sums over A(D) and A(D_dual); the box
// bound grows until the combined tails sit well under tol.
inline JacobiPoissonReport jacobi_poisson_check(const ConstructionALattice& lat, double t,
                                                double tol,
                                                std::uint64_t budget = kEnumerationBudget) {
    if (!(t > 0)) throw std::invalid_argument("t must be positive");
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const std::uint32_t n = lat.n();
    const double s = to_double(lat.scale());
    const double det = to_double(lat.det());

    // Lambda = s A(D) with D = lat.code(); Lambda* = (1/(2s)) A(D_dual).
    const double tau_dual = t / (4 * s * s);
    const double tau_primal = s * s / t;
    const double rhs_factor = det * std::pow(t, -0.5 * n);
    const LinearCode dual = lat.code().dual();

    std::uint32_t bound = 4;
    constexpr std::uint32_t kMaxBound = 64;
    while (true) {
        auto [lhs, lhs_tail] = detail::gaussian_sum(dual, tau_dual, bound, budget);
        auto [inner, inner_tail] = detail::gaussian_sum(lat.code(), tau_primal, bound, budget);
        double rhs = rhs_factor * inner;
        double tails = lhs_tail + rhs_factor * inner_tail;
        if (tails <= tol * 1e-2 || bound >= kMaxBound) {
            if (tails > tol)
                throw budget_error("tolerance unreachable within coordinate bound " +
                                   std::to_string(kMaxBound));
            JacobiPoissonReport rep;
            rep.lhs = lhs;
            rep.rhs = rhs;
            rep.residual = std::fabs(lhs - rhs);
            rep.tail_bound = tails;
            rep.box_bound = bound;
            rep.pass = rep.residual <= tol + tails;
            return rep;
        }
        bound *= 2;
    }
}

} // namespace mwlab
