#pragma once

#include "mwlab/bigint.hpp"
#include "mwlab/codes.hpp"
#include "mwlab/cyclotomic.hpp"
#include "mwlab/errors.hpp"
#include "mwlab/field.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mwlab {

inline constexpr std::uint64_t kTransformBudget = std::uint64_t(1) << 16;

// The index space of m x n matrices over F_q.  Matrices are numbered in mixed
// radix q: digit d (least significant first) is entry (d / n, d % n), so
// index 0 is the zero matrix.
class MatrixSpace {
public:
    MatrixSpace(FieldPtr field, std::uint32_t m, std::uint32_t n,
                std::uint64_t budget = kTransformBudget)
        : field_(std::move(field)), m_(m), n_(n) {
        if (!field_) throw std::invalid_argument("null field");
        if (m_ == 0 || n_ == 0) throw std::invalid_argument("matrix shape must be positive");
        BigInt total = pow_int(BigInt(field_->q()), std::uint64_t(m_) * n_);
        if (total > BigInt(budget))
            throw budget_error("matrix space of " + total.str() + " points exceeds budget " +
                               std::to_string(budget));
        points_ = total.convert_to<std::uint64_t>();
    }

    const FieldPtr& field() const { return field_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t digit_count() const { return m_ * n_; }
    std::uint64_t points() const { return points_; }

    bool same_shape(const MatrixSpace& o) const {
        return field_->compatible(*o.field_) && m_ == o.m_ && n_ == o.n_;
    }

    CodeMatrix matrix_at(std::uint64_t idx) const {
        if (idx >= points_) throw std::invalid_argument("matrix index out of range");
        CodeMatrix x(m_, n_);
        const fq_t q = field_->q();
        for (std::uint32_t d = 0; d < digit_count(); ++d) {
            x.a[d] = static_cast<fq_t>(idx % q);
            idx /= q;
        }
        return x;
    }

    std::uint64_t index_of(const CodeMatrix& x) const {
        if (x.rows != m_ || x.cols != n_) throw std::invalid_argument("matrix shape mismatch");
        const fq_t q = field_->q();
        std::uint64_t idx = 0;
        for (std::uint32_t d = digit_count(); d-- > 0;) idx = idx * q + field_->check(x.a[d]);
        return idx;
    }

private:
    FieldPtr field_;
    std::uint32_t m_, n_;
    std::uint64_t points_ = 0;
};

// Dense table of a function F_q^{m x n} -> Q[zeta_p].
class MatrixFunction {
public:
    explicit MatrixFunction(MatrixSpace space)
        : space_(std::move(space)),
          values_(space_.points(), CycRat(space_.field()->p())) {}

    const MatrixSpace& space() const { return space_; }
    const CycRat& value(std::uint64_t idx) const { return values_.at(idx); }

    void set_value(std::uint64_t idx, CycRat v) {
        if (v.order() != space_.field()->p())
            throw std::invalid_argument("value has wrong cyclotomic order");
        values_.at(idx) = std::move(v);
    }

    void set_value(std::uint64_t idx, const Rational& v) {
        values_.at(idx) = CycRat::constant(space_.field()->p(), v);
    }

    bool operator==(const MatrixFunction& o) const {
        return space_.same_shape(o.space_) && values_ == o.values_;
    }

private:
    MatrixSpace space_;
    std::vector<CycRat> values_;
};

// <x, y> = trace of x^T y as a matrix, which is the entrywise dot product.
inline fq_t matrix_pairing(const Field& field, const CodeMatrix& x, const CodeMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("pairing of mismatched shapes");
    fq_t acc = 0;
    for (std::size_t d = 0; d < x.a.size(); ++d)
        acc = field.add(acc, field.mul(x.a[d], y.a[d]));
    return acc;
}

namespace detail {

// Relabeling b -> M b where M_ij = Tr(x^{i+j}) is the (nondegenerate) trace
// form in the polynomial basis.  After applying it to one side, the additive
// character psi(a b) becomes the plain product character zeta^{a . b} on
// base-p digits, so the Fourier transform factors into base-p passes.
inline std::vector<fq_t> trace_form_relabel(const Field& field) {
    const std::uint32_t p = field.p();
    const std::uint32_t e = field.extension_degree();
    const fq_t q = field.q();
    std::vector<fq_t> perm(q);
    if (e == 1) {
        for (fq_t b = 0; b < q; ++b) perm[b] = b;
        return perm;
    }
    std::vector<std::uint32_t> form(std::size_t(e) * e);
    for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j)
            form[std::size_t(i) * e + j] = field.trace(field.pow(p, i + j));
    std::vector<bool> seen(q, false);
    for (fq_t b = 0; b < q; ++b) {
        std::vector<std::uint32_t> d = field.coeffs(b);
        std::vector<std::uint32_t> out(e, 0);
        for (std::uint32_t i = 0; i < e; ++i) {
            std::uint64_t acc = 0;
            for (std::uint32_t j = 0; j < e; ++j)
                acc += std::uint64_t(form[std::size_t(i) * e + j]) * d[j];
            out[i] = static_cast<std::uint32_t>(acc % p);
        }
        perm[b] = field.from_coeffs(out);
        if (seen[perm[b]]) throw std::logic_error("trace form relabeling is not a bijection");
        seen[perm[b]] = true;
    }
    return perm;
}

// In-place base-p transform passes over a point-major coefficient array
// w[point * p + t].  Kernel per digit: out[a] = sum_b in[b] * zeta^{+-a b},
// realized as index rotations of the coefficient blocks.
template <class T>
void dft_passes(std::vector<T>& w, std::uint64_t points, std::uint32_t p, std::uint64_t digits,
                bool inverse) {
    std::vector<T> tmp(std::size_t(p) * p);
    std::uint64_t stride = 1;
    for (std::uint64_t d = 0; d < digits; ++d, stride *= p) {
        for (std::uint64_t block = 0; block < points; block += stride * p) {
            for (std::uint64_t off = 0; off < stride; ++off) {
                const std::uint64_t base = block + off;
                for (std::uint32_t b = 0; b < p; ++b) {
                    const T* src = w.data() + (base + b * stride) * p;
                    T* dst = tmp.data() + std::size_t(b) * p;
                    for (std::uint32_t t = 0; t < p; ++t) dst[t] = src[t];
                }
                for (std::uint32_t a = 0; a < p; ++a) {
                    T* out = w.data() + (base + a * stride) * p;
                    for (std::uint32_t t = 0; t < p; ++t) out[t] = T(0);
                    for (std::uint32_t b = 0; b < p; ++b) {
                        std::uint32_t s = static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
                        if (inverse && s != 0) s = p - s;
                        const T* in = tmp.data() + std::size_t(b) * p;
                        for (std::uint32_t t = s; t < p; ++t) out[t] += in[t - s];
                        for (std::uint32_t t = 0; t < s; ++t) out[t] += in[p - s + t];
                    }
                }
            }
        }
    }
}

inline MatrixFunction fourier_transform_impl(const MatrixFunction& f, bool inverse) {
    const MatrixSpace& sp = f.space();
    const Field& field = *sp.field();
    const std::uint32_t p = field.p();
    const fq_t q = field.q();
    const std::uint64_t points = sp.points();
    const std::uint64_t digits = std::uint64_t(sp.digit_count()) * field.extension_degree();

    BigInt den = 1;
    for (std::uint64_t i = 0; i < points; ++i)
        for (std::uint32_t t = 0; t < p; ++t)
            den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(f.value(i).coeff(t)));

    // Scale to integers and apply the per-entry relabeling on the way in.
    const std::vector<fq_t> perm = detail::trace_form_relabel(field);
    std::vector<BigInt> scaled(points * p);
    BigInt maxabs = 0;
    for (std::uint64_t i = 0; i < points; ++i) {
        std::uint64_t rest = i, j = 0, place = 1;
        for (std::uint32_t d = 0; d < sp.digit_count(); ++d) {
            j += std::uint64_t(perm[rest % q]) * place;
            rest /= q;
            place *= q;
        }
        const CycRat& v = f.value(i);
        for (std::uint32_t t = 0; t < p; ++t) {
            const Rational& c = v.coeff(t);
            BigInt w = boost::multiprecision::numerator(c) *
                       (den / boost::multiprecision::denominator(c));
            if (abs(w) > maxabs) maxabs = abs(w);
            scaled[j * p + t] = std::move(w);
        }
    }

    // Coefficients grow by at most a factor p per pass, p^digits = points in
    // total, so the int64 path is safe whenever maxabs * points fits.
    const bool fits64 = maxabs * points < (BigInt(1) << 62);
    if (fits64) {
        std::vector<std::int64_t> w(points * p);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = scaled[i].convert_to<std::int64_t>();
        detail::dft_passes(w, points, p, digits, inverse);
        scaled.assign(w.begin(), w.end());
    } else {
        detail::dft_passes(scaled, points, p, digits, inverse);
    }

    BigInt out_den = inverse ? BigInt(den * points) : den;
    MatrixFunction out(sp);
    std::vector<Rational> coeffs(p);
    for (std::uint64_t i = 0; i < points; ++i) {
        for (std::uint32_t t = 0; t < p; ++t) coeffs[t] = make_rational(scaled[i * p + t], out_den);
        out.set_value(i, CycRat::from_coeffs(p, coeffs));
    }
    return out;
}

} // namespace detail

// FTf(x) = sum_xi f(xi) psi(<x, xi>), exact over Q[zeta_p].
inline MatrixFunction finite_fourier_transform(const MatrixFunction& f) {
    return detail::fourier_transform_impl(f, false);
}

// f(x) = (1/q^{mn}) sum_xi FTf(xi) psi(-<x, xi>)
inline MatrixFunction inverse_fourier_transform(const MatrixFunction& f) {
    return detail::fourier_transform_impl(f, true);
}

// 0/1 table of membership in the tuple.
inline MatrixFunction characteristic_function(const CodeTuple& tuple,
                                              std::uint64_t budget = kTransformBudget) {
    MatrixSpace sp(tuple.field(), tuple.m(), tuple.n(), budget);
    MatrixFunction f(sp);
    tuple.for_each_matrix([&](const CodeMatrix& x) { f.set_value(sp.index_of(x), Rational(1)); },
                          budget);
    return f;
}

// sum_{xi in tuple} psi(<x, xi>) by direct enumeration; stays in Z[zeta_p].
inline CycInt ft_characteristic_at(const CodeTuple& tuple, const CodeMatrix& x,
                                   std::uint64_t budget = kEnumerationBudget) {
    const Field& field = *tuple.field();
    std::vector<BigInt> counts(field.p(), BigInt(0));
    tuple.for_each_matrix(
        [&](const CodeMatrix& xi) { counts[field.trace(matrix_pairing(field, x, xi))] += 1; },
        budget);
    return CycInt::from_coeffs(field.p(), std::move(counts));
}

// Checks FT(chi_tuple) = |tuple| * chi_dual pointwise.
inline bool verify_ft_characteristic(const CodeTuple& tuple,
                                     std::uint64_t budget = kTransformBudget) {
    MatrixFunction chi = characteristic_function(tuple, budget);
    MatrixFunction ft = finite_fourier_transform(chi);
    MatrixFunction dual_chi = characteristic_function(tuple.dual(), budget);
    Rational size(tuple.size());
    for (std::uint64_t i = 0; i < chi.space().points(); ++i) {
        CycRat want = dual_chi.value(i);
        want *= size;
        if (!(ft.value(i) == want)) return false;
    }
    return true;
}

// Table of f(xi) = z^{ew(xi)} over the whole space.
inline MatrixFunction ew_power_function(const MatrixSpace& sp, const Rational& z) {
    MatrixFunction f(sp);
    std::vector<Rational> zpow(sp.n() + 1);
    zpow[0] = 1;
    for (std::uint32_t i = 1; i <= sp.n(); ++i) zpow[i] = zpow[i - 1] * z;
    for (std::uint64_t i = 0; i < sp.points(); ++i)
        f.set_value(i, zpow[effective_length_weight(sp.matrix_at(i))]);
    return f;
}

// Closed form of the transform of z^{ew}:
//   FT z^{ew}(x) = (1 - z)^{ew(x)} (1 + (q^m - 1) z)^{n - ew(x)}
inline Rational ft_ew_closed_form(const Field& field, const CodeMatrix& x, const Rational& z) {
    const std::uint32_t ew = effective_length_weight(x);
    const Rational qm(pow_int(BigInt(field.q()), x.rows));
    return pow_rational(1 - z, ew) * pow_rational(1 + (qm - 1) * z, x.cols - ew);
}

// Transforms z^{ew} over the full space and compares every point with the
// closed form.
inline bool verify_ew_transform(const MatrixSpace& sp, const Rational& z) {
    MatrixFunction f = ew_power_function(sp, z);
    MatrixFunction ft = finite_fourier_transform(f);
    for (std::uint64_t i = 0; i < sp.points(); ++i) {
        CycRat want =
            CycRat::constant(sp.field()->p(), ft_ew_closed_form(*sp.field(), sp.matrix_at(i), z));
        if (!(ft.value(i) == want)) return false;
    }
    return true;
}

struct PoissonCheck {
    CycRat dual_sum;    // sum of f over the dual tuple
    CycRat scaled_sum;  // (1/|tuple|) sum of FTf over the tuple
    bool equal = false;
};

// sum_{x in dual} f(x) = (1/|tuple|) sum_{x in tuple} FTf(x)
inline PoissonCheck poisson_check(const CodeTuple& tuple, const MatrixFunction& f) {
    const MatrixSpace& sp = f.space();
    if (!sp.field()->compatible(*tuple.field()) || sp.m() != tuple.m() || sp.n() != tuple.n())
        throw std::invalid_argument("function space does not match the tuple");
    const std::uint64_t budget = sp.points();

    CycRat lhs(sp.field()->p());
    tuple.dual().for_each_matrix([&](const CodeMatrix& x) { lhs += f.value(sp.index_of(x)); },
                                 budget);

    MatrixFunction ft = finite_fourier_transform(f);
    CycRat rhs(sp.field()->p());
    tuple.for_each_matrix([&](const CodeMatrix& x) { rhs += ft.value(sp.index_of(x)); }, budget);
    rhs *= make_rational(1, tuple.size());

    bool equal = lhs == rhs;
    return PoissonCheck{std::move(lhs), std::move(rhs), equal};
}

} // namespace mwlab
