#pragma once

#include "mwlab/cyclotomic.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwlab {

// Element label in [0, q).  Labels encode coordinates in the polynomial
// basis: the element sum_i c_i x^i has label sum_i c_i p^i.
using fq_t = std::uint32_t;

// F_q for q = p^e a prime power, q <= 2^20.  Prime fields are residues mod p;
// extension fields are F_p[x] modulo a monic irreducible of degree e
// (irreducibility is checked at construction by trial division).  Fields are
// immutable and shared via shared_ptr; element operations take plain labels.
class Field {
public:
    static std::shared_ptr<const Field> make(std::uint64_t q) {
        return make_impl(q, nullptr);
    }

    static std::shared_ptr<const Field> make(std::uint64_t q, const std::vector<fq_t>& modulus) {
        return make_impl(q, &modulus);
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t extension_degree() const { return e_; }
    fq_t q() const { return q_; }

    // Ascending coefficients of the defining polynomial, size e+1, monic.
    // Empty for prime fields.
    const std::vector<fq_t>& modulus() const { return modulus_; }

    bool compatible(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

    fq_t check(fq_t a) const {
        if (a >= q_) throw std::invalid_argument("element label out of range");
        return a;
    }

    fq_t add(fq_t a, fq_t b) const {
        if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
        return add_slow(a, b);
    }

    fq_t neg(fq_t a) const {
        if (!neg_table_.empty()) return neg_table_[a];
        return neg_slow(a);
    }

    fq_t sub(fq_t a, fq_t b) const { return add(a, neg(b)); }

    fq_t mul(fq_t a, fq_t b) const {
        if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
        return mul_slow(a, b);
    }

    fq_t inv(fq_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        if (!inv_table_.empty()) return inv_table_[a];
        return pow(a, q_ - 2);
    }

    fq_t pow(fq_t a, std::uint64_t k) const {
        fq_t r = 1;
        fq_t b = a;
        while (k != 0) {
            if (k & 1) r = mul(r, b);
            b = mul(b, b);
            k >>= 1;
        }
        return r;
    }

    // Trace to F_p: sum of the e Frobenius conjugates.  Always lands in the
    // prime subfield, returned as a residue in [0, p).
    std::uint32_t trace(fq_t a) const {
        if (!trace_table_.empty()) return trace_table_[a];
        return trace_slow(a);
    }

    // Canonical additive character psi(a) = zeta_p^{trace(a)}.
    CycInt character(fq_t a) const { return CycInt::root_power(p_, trace(a)); }

    std::vector<std::uint32_t> coeffs(fq_t a) const {
        std::vector<std::uint32_t> d(e_);
        for (std::uint32_t i = 0; i < e_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    fq_t from_coeffs(const std::vector<std::uint32_t>& d) const {
        if (d.size() > e_) throw std::invalid_argument("too many coefficients for field element");
        fq_t a = 0;
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] >= p_) throw std::invalid_argument("field element coefficient not reduced mod p");
            a = a * p_ + d[i];
        }
        return a;
    }

private:
    Field(std::uint32_t p, std::uint32_t e, fq_t q, std::vector<fq_t> modulus)
        : p_(p), e_(e), q_(q), modulus_(std::move(modulus)) {
        if (q_ <= kTableLimit) build_tables();
    }

    static constexpr fq_t kTableLimit = 512;
    static constexpr std::uint64_t kMaxQ = 1u << 20;

    static std::shared_ptr<const Field> make_impl(std::uint64_t q, const std::vector<fq_t>* modulus) {
        if (q < 2 || q > kMaxQ) throw std::invalid_argument("field size out of range [2, 2^20]");
        std::uint32_t p = smallest_prime_factor(static_cast<std::uint32_t>(q));
        std::uint32_t e = 0;
        std::uint64_t t = q;
        while (t % p == 0) {
            t /= p;
            ++e;
        }
        if (t != 1)
            throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");

        std::vector<fq_t> mod;
        if (e == 1) {
            if (modulus != nullptr && !modulus->empty())
                throw std::invalid_argument("modulus given for a prime field");
        } else {
            mod = (modulus != nullptr && !modulus->empty()) ? *modulus : builtin_modulus(p, e);
            validate_modulus(p, e, mod);
        }
        return std::shared_ptr<const Field>(new Field(p, e, static_cast<fq_t>(q), std::move(mod)));
    }

    static std::uint32_t smallest_prime_factor(std::uint32_t n) {
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return d;
        return n;
    }

    static std::vector<fq_t> builtin_modulus(std::uint32_t p, std::uint32_t e) {
        static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<fq_t>> table = {
            {{2, 2}, {1, 1, 1}},       // x^2 + x + 1
            {{2, 3}, {1, 1, 0, 1}},    // x^3 + x + 1
            {{2, 4}, {1, 1, 0, 0, 1}}, // x^4 + x + 1
            {{3, 2}, {1, 0, 1}},       // x^2 + 1
            {{3, 3}, {1, 2, 0, 1}},    // x^3 + 2x + 1
            {{5, 2}, {2, 0, 1}},       // x^2 + 2
        };
        auto it = table.find({p, e});
        if (it == table.end())
            throw std::invalid_argument("no built-in modulus for p=" + std::to_string(p) +
                                        ", e=" + std::to_string(e) + "; supply one explicitly");
        return it->second;
    }

    // Trial division by every monic polynomial of degree 1..e/2 over F_p.
    static void validate_modulus(std::uint32_t p, std::uint32_t e, const std::vector<fq_t>& mod) {
        if (mod.size() != e + 1) throw std::invalid_argument("modulus degree must equal the extension degree");
        for (fq_t c : mod)
            if (c >= p) throw std::invalid_argument("modulus coefficient not reduced mod p");
        if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");

        for (std::uint32_t d = 1; 2 * d <= e; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<std::uint32_t> div(d + 1);
                std::uint64_t t = idx;
                for (std::uint32_t i = 0; i < d; ++i) {
                    div[i] = static_cast<std::uint32_t>(t % p);
                    t /= p;
                }
                div[d] = 1;
                if (divides(p, div, mod))
                    throw std::invalid_argument("modulus is reducible over F_p");
            }
        }
    }

    static bool divides(std::uint32_t p, const std::vector<std::uint32_t>& div,
                        const std::vector<fq_t>& mod) {
        std::vector<std::uint32_t> r(mod.begin(), mod.end());
        std::size_t d = div.size() - 1;
        for (std::size_t pos = r.size(); pos-- > d;) {
            std::uint32_t c = r[pos];
            if (c == 0) continue;
            for (std::size_t j = 0; j <= d; ++j) {
                std::size_t k = pos - d + j;
                r[k] = (r[k] + std::uint64_t(p - 1) * c % p * div[j]) % p;
            }
        }
        for (std::size_t i = 0; i < d; ++i)
            if (r[i] != 0) return false;
        return true;
    }

    fq_t add_slow(fq_t a, fq_t b) const {
        fq_t r = 0;
        fq_t mult = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += (a % p_ + b % p_) % p_ * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return r;
    }

    fq_t neg_slow(fq_t a) const {
        fq_t r = 0;
        fq_t mult = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += (p_ - a % p_) % p_ * mult;
            a /= p_;
            mult *= p_;
        }
        return r;
    }

    fq_t mul_slow(fq_t a, fq_t b) const {
        if (e_ == 1) return static_cast<fq_t>(std::uint64_t(a) * b % p_);
        std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
        std::vector<std::uint32_t> da = coeffs(a), db = coeffs(b);
        for (std::uint32_t i = 0; i < e_; ++i)
            for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
        for (std::size_t i = prod.size(); i-- > e_;) {
            std::uint64_t c = prod[i] % p_;
            if (c == 0) continue;
            for (std::uint32_t j = 0; j < e_; ++j)
                prod[i - e_ + j] += (p_ - modulus_[j]) % p_ * c;
        }
        fq_t r = 0;
        for (std::uint32_t i = e_; i-- > 0;) r = r * p_ + static_cast<fq_t>(prod[i] % p_);
        return r;
    }

    std::uint32_t trace_slow(fq_t a) const {
        fq_t acc = a;
        fq_t frob = a;
        for (std::uint32_t i = 1; i < e_; ++i) {
            frob = pow(frob, p_);
            acc = add(acc, frob);
        }
        if (acc >= p_) throw std::logic_error("trace escaped the prime subfield");
        return acc;
    }

    void build_tables() {
        add_table_.resize(std::size_t(q_) * q_);
        mul_table_.resize(std::size_t(q_) * q_);
        neg_table_.resize(q_);
        inv_table_.resize(q_);
        trace_table_.resize(q_);
        for (fq_t a = 0; a < q_; ++a) {
            neg_table_[a] = neg_slow(a);
            for (fq_t b = 0; b < q_; ++b) {
                add_table_[std::size_t(a) * q_ + b] = add_slow(a, b);
                mul_table_[std::size_t(a) * q_ + b] = mul_slow(a, b);
            }
        }
        inv_table_[0] = 0; // unused; inv(0) throws before lookup
        for (fq_t a = 1; a < q_; ++a) {
            fq_t r = 1, b = a;
            std::uint64_t k = q_ - 2;
            while (k != 0) {
                if (k & 1) r = mul_table_[std::size_t(r) * q_ + b];
                b = mul_table_[std::size_t(b) * q_ + b];
                k >>= 1;
            }
            inv_table_[a] = r;
        }
        for (fq_t a = 0; a < q_; ++a) trace_table_[a] = trace_slow_tabled(a);
    }

    std::uint32_t trace_slow_tabled(fq_t a) const {
        fq_t acc = a;
        fq_t frob = a;
        for (std::uint32_t i = 1; i < e_; ++i) {
            fq_t r = 1, b = frob;
            std::uint64_t k = p_;
            while (k != 0) {
                if (k & 1) r = mul_table_[std::size_t(r) * q_ + b];
                b = mul_table_[std::size_t(b) * q_ + b];
                k >>= 1;
            }
            frob = r;
            acc = add_table_[std::size_t(acc) * q_ + frob];
        }
        if (acc >= p_) throw std::logic_error("trace escaped the prime subfield");
        return acc;
    }

    std::uint32_t p_;
    std::uint32_t e_;
    fq_t q_;
    std::vector<fq_t> modulus_;
    std::vector<fq_t> add_table_, mul_table_, neg_table_, inv_table_;
    std::vector<std::uint32_t> trace_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Convenience wrapper pairing a label with its field; handy in tests and
// call sites that juggle several fields.  The field must outlive the element.
class FieldElement {
public:
    FieldElement(const Field& f, fq_t v) : f_(&f), v_(f.check(v)) {}

    fq_t value() const { return v_; }
    const Field& field() const { return *f_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_field(b);
        return FieldElement(*a.f_, a.f_->add(a.v_, b.v_));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check_field(b);
        return FieldElement(*a.f_, a.f_->sub(a.v_, b.v_));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_field(b);
        return FieldElement(*a.f_, a.f_->mul(a.v_, b.v_));
    }
    FieldElement operator-() const { return FieldElement(*f_, f_->neg(v_)); }
    FieldElement inverse() const { return FieldElement(*f_, f_->inv(v_)); }
    std::uint32_t trace() const { return f_->trace(v_); }
    CycInt character() const { return f_->character(v_); }

    bool operator==(const FieldElement& o) const { return f_->compatible(*o.f_) && v_ == o.v_; }

private:
    void check_field(const FieldElement& o) const {
        if (f_ != o.f_ && !f_->compatible(*o.f_))
            throw std::invalid_argument("field elements from incompatible fields");
    }

    const Field* f_;
    fq_t v_;
};

} // namespace mwlab
