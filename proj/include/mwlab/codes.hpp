#pragma once

#include "mwlab/bigint.hpp"
#include "mwlab/errors.hpp"
#include "mwlab/field.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace mwlab {

// Length-n vector over F_q, stored as labels.
using Word = std::vector<fq_t>;

inline std::uint32_t hamming_weight(const Word& w) {
    std::uint32_t c = 0;
    for (fq_t v : w)
        if (v != 0) ++c;
    return c;
}

// Row-major m x n matrix of field labels.
struct CodeMatrix {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<fq_t> a;

    CodeMatrix() = default;
    CodeMatrix(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    fq_t& at(std::uint32_t r, std::uint32_t c) { return a[std::size_t(r) * cols + c]; }
    fq_t at(std::uint32_t r, std::uint32_t c) const { return a[std::size_t(r) * cols + c]; }

    bool operator==(const CodeMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

// Number of columns containing a nonzero entry.
inline std::uint32_t effective_length_weight(const CodeMatrix& x) {
    std::uint32_t c = 0;
    for (std::uint32_t j = 0; j < x.cols; ++j) {
        for (std::uint32_t i = 0; i < x.rows; ++i) {
            if (x.at(i, j) != 0) {
                ++c;
                break;
            }
        }
    }
    return c;
}

inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t(1) << 24;

// Linear [n, k] code over F_q, held in reduced row echelon form.  Two codes
// are equal as sets iff their stored generator matrices are identical, so the
// representation doubles as a canonical form.
class LinearCode {
public:
    static LinearCode from_generator(FieldPtr field, std::uint32_t n,
                                     const std::vector<Word>& rows) {
        if (!field) throw std::invalid_argument("null field");
        if (n == 0) throw std::invalid_argument("code length must be positive");
        for (const Word& r : rows) {
            if (r.size() != n) throw std::invalid_argument("generator rows of unequal length");
            for (fq_t v : r) field->check(v);
        }
        LinearCode c;
        c.field_ = std::move(field);
        c.n_ = n;
        c.reduce(rows);
        return c;
    }

    const FieldPtr& field() const { return field_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t k() const { return k_; }
    BigInt size() const { return pow_int(BigInt(field_->q()), k_); }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }

    const fq_t* row(std::uint32_t i) const { return gen_.data() + std::size_t(i) * n_; }

    std::vector<Word> generator_rows() const {
        std::vector<Word> out(k_);
        for (std::uint32_t i = 0; i < k_; ++i) out[i] = Word(row(i), row(i) + n_);
        return out;
    }

    bool operator==(const LinearCode& o) const {
        return field_->compatible(*o.field_) && n_ == o.n_ && gen_ == o.gen_;
    }

    bool contains(const Word& w) const {
        if (w.size() != n_) throw std::invalid_argument("word length mismatch");
        Word r = w;
        for (fq_t v : r) field_->check(v);
        for (std::uint32_t i = 0; i < k_; ++i) {
            fq_t c = r[pivots_[i]];
            if (c == 0) continue;
            const fq_t* g = row(i);
            for (std::uint32_t j = 0; j < n_; ++j) r[j] = field_->sub(r[j], field_->mul(c, g[j]));
        }
        for (fq_t v : r)
            if (v != 0) return false;
        return true;
    }

    // Dual code: one generator per free column, identity on the free part,
    // negated generator entries on the pivot part.
    LinearCode dual() const {
        std::vector<bool> is_pivot(n_, false);
        for (std::uint32_t p : pivots_) is_pivot[p] = true;
        std::vector<Word> rows;
        for (std::uint32_t f = 0; f < n_; ++f) {
            if (is_pivot[f]) continue;
            Word h(n_, 0);
            h[f] = 1;
            for (std::uint32_t i = 0; i < k_; ++i) h[pivots_[i]] = field_->neg(row(i)[f]);
            rows.push_back(std::move(h));
        }
        return from_generator(field_, n_, rows);
    }

    // Visits all q^k codewords in lexicographic message order, reusing one
    // word buffer.  Each odometer step adds (next - current) * row for the
    // digits that change; the label difference is a field subtraction, not 1,
    // except in prime fields.
    template <class F>
    void for_each_codeword(F&& fn, std::uint64_t budget = kEnumerationBudget) const {
        std::uint64_t total = checked_count(k_, budget, "codeword enumeration");
        Word w(n_, 0);
        fn(static_cast<const Word&>(w));
        if (total == 1) return;
        std::vector<fq_t> digits(k_, 0);
        for (std::uint64_t c = 1; c < total; ++c) {
            std::uint32_t j = k_;
            while (true) {
                --j;
                fq_t cur = digits[j];
                fq_t next = (cur + 1 == field_->q()) ? 0 : cur + 1;
                add_scaled_row(w, j, field_->sub(next, cur));
                digits[j] = next;
                if (next != 0) break;
            }
            fn(static_cast<const Word&>(w));
        }
    }

    std::vector<Word> codewords(std::uint64_t budget = kEnumerationBudget) const {
        std::vector<Word> out;
        for_each_codeword([&](const Word& w) { out.push_back(w); }, budget);
        return out;
    }

    // One representative per coset of the code in F_q^n: the q^{n-k} words
    // supported on the free columns, in lexicographic order.
    std::vector<Word> coset_representatives(std::uint64_t budget = kEnumerationBudget) const {
        std::vector<bool> is_pivot(n_, false);
        for (std::uint32_t p : pivots_) is_pivot[p] = true;
        std::vector<std::uint32_t> free_cols;
        for (std::uint32_t j = 0; j < n_; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);

        std::uint64_t total = checked_count(n_ - k_, budget, "coset enumeration");
        std::vector<Word> out;
        out.reserve(static_cast<std::size_t>(total));
        Word w(n_, 0);
        out.push_back(w);
        std::vector<fq_t> digits(free_cols.size(), 0);
        for (std::uint64_t c = 1; c < total; ++c) {
            std::size_t j = free_cols.size();
            while (true) {
                --j;
                if (++digits[j] == field_->q()) {
                    digits[j] = 0;
                    w[free_cols[j]] = 0;
                } else {
                    w[free_cols[j]] = digits[j];
                    break;
                }
            }
            out.push_back(w);
        }
        return out;
    }

private:
    LinearCode() = default;

    void reduce(std::vector<Word> rows) {
        std::uint32_t r = 0;
        for (std::uint32_t col = 0; col < n_ && r < rows.size(); ++col) {
            std::uint32_t sel = r;
            while (sel < rows.size() && rows[sel][col] == 0) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[r], rows[sel]);
            fq_t scale = field_->inv(rows[r][col]);
            for (std::uint32_t j = 0; j < n_; ++j) rows[r][j] = field_->mul(scale, rows[r][j]);
            for (std::uint32_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][col] == 0) continue;
                fq_t c = rows[i][col];
                for (std::uint32_t j = 0; j < n_; ++j)
                    rows[i][j] = field_->sub(rows[i][j], field_->mul(c, rows[r][j]));
            }
            pivots_.push_back(col);
            ++r;
        }
        k_ = r;
        gen_.assign(std::size_t(k_) * n_, 0);
        for (std::uint32_t i = 0; i < k_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j) gen_[std::size_t(i) * n_ + j] = rows[i][j];
    }

    void add_scaled_row(Word& w, std::uint32_t i, fq_t s) const {
        const fq_t* g = row(i);
        if (s == 1) {
            for (std::uint32_t j = 0; j < n_; ++j) w[j] = field_->add(w[j], g[j]);
        } else {
            for (std::uint32_t j = 0; j < n_; ++j)
                w[j] = field_->add(w[j], field_->mul(s, g[j]));
        }
    }

    // q^dim as uint64, verified against the budget first.
    std::uint64_t checked_count(std::uint32_t dim, std::uint64_t budget, const char* what) const {
        BigInt total = pow_int(BigInt(field_->q()), dim);
        if (total > BigInt(budget))
            throw budget_error(std::string(what) + " of " + total.str() + " words exceeds budget " +
                               std::to_string(budget));
        return total.convert_to<std::uint64_t>();
    }

    FieldPtr field_;
    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::vector<fq_t> gen_;
    std::vector<std::uint32_t> pivots_;
};

// Tuple (C_1, ..., C_m) of linear codes sharing one field and length; its
// elements are the m x n matrices whose i-th row ranges over C_i.
class CodeTuple {
public:
    explicit CodeTuple(std::vector<LinearCode> codes) : codes_(std::move(codes)) {
        if (codes_.empty()) throw std::invalid_argument("code tuple must be nonempty");
        for (const LinearCode& c : codes_) {
            if (!c.field()->compatible(*codes_[0].field()))
                throw std::invalid_argument("code tuple mixes fields");
            if (c.n() != codes_[0].n()) throw std::invalid_argument("code tuple mixes lengths");
        }
    }

    std::uint32_t m() const { return static_cast<std::uint32_t>(codes_.size()); }
    std::uint32_t n() const { return codes_[0].n(); }
    const FieldPtr& field() const { return codes_[0].field(); }
    const LinearCode& code(std::uint32_t i) const { return codes_.at(i); }
    const std::vector<LinearCode>& codes() const { return codes_; }

    BigInt size() const {
        BigInt s = 1;
        for (const LinearCode& c : codes_) s *= c.size();
        return s;
    }

    CodeTuple dual() const {
        std::vector<LinearCode> d;
        d.reserve(codes_.size());
        for (const LinearCode& c : codes_) d.push_back(c.dual());
        return CodeTuple(std::move(d));
    }

    bool contains(const CodeMatrix& x) const {
        if (x.rows != m() || x.cols != n()) throw std::invalid_argument("matrix shape mismatch");
        for (std::uint32_t i = 0; i < m(); ++i) {
            Word row(x.a.begin() + std::size_t(i) * n(), x.a.begin() + std::size_t(i + 1) * n());
            if (!codes_[i].contains(row)) return false;
        }
        return true;
    }

    // Visits all prod |C_i| matrices; the last row varies fastest, so each
    // step rewrites a single row of the reused matrix.
    template <class F>
    void for_each_matrix(F&& fn, std::uint64_t budget = kEnumerationBudget) const {
        BigInt total_big = size();
        if (total_big > BigInt(budget))
            throw budget_error("matrix enumeration of " + total_big.str() + " exceeds budget " +
                               std::to_string(budget));
        std::uint64_t total = total_big.convert_to<std::uint64_t>();

        std::vector<std::vector<Word>> lists;
        lists.reserve(codes_.size());
        for (const LinearCode& c : codes_) lists.push_back(c.codewords(budget));

        CodeMatrix x(m(), n());
        for (std::uint32_t i = 0; i < m(); ++i) set_row(x, i, lists[i][0]);
        fn(static_cast<const CodeMatrix&>(x));

        std::vector<std::size_t> idx(codes_.size(), 0);
        for (std::uint64_t c = 1; c < total; ++c) {
            std::size_t j = codes_.size();
            while (true) {
                --j;
                if (++idx[j] == lists[j].size()) idx[j] = 0;
                set_row(x, static_cast<std::uint32_t>(j), lists[j][idx[j]]);
                if (idx[j] != 0) break;
            }
            fn(static_cast<const CodeMatrix&>(x));
        }
    }

private:
    static void set_row(CodeMatrix& x, std::uint32_t i, const Word& w) {
        for (std::uint32_t j = 0; j < x.cols; ++j) x.at(i, j) = w[j];
    }

    std::vector<LinearCode> codes_;
};

} // namespace mwlab
