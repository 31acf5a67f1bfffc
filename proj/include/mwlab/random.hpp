#pragma once

#include "mwlab/codes.hpp"
#include "mwlab/field.hpp"
#include "mwlab/transforms.hpp"

#include <cstdint>
#include <vector>

namespace mwlab {

// splitmix64: tiny, seedable, and identical on every platform, which keeps
// seeded reports byte-stable.  Standard-library distributions are avoided on
// purpose; their output is implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Draw in [0, bound) by remainder.  The modulo bias is immaterial here
    // and the simple rule is easy to reproduce in other tooling.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Generator matrix with uniform entries and k drawn from {0, ..., n}; row
// reduction may shrink the rank, which keeps low-dimensional codes in the
// mix.
inline LinearCode random_linear_code(const FieldPtr& field, std::uint32_t n, SplitMix64& rng) {
    std::uint32_t k = static_cast<std::uint32_t>(rng.below(n + 1));
    std::vector<Word> rows(k, Word(n));
    for (Word& r : rows)
        for (fq_t& v : r) v = static_cast<fq_t>(rng.below(field->q()));
    return LinearCode::from_generator(field, n, rows);
}

inline CodeTuple random_code_tuple(const FieldPtr& field, std::uint32_t m, std::uint32_t n,
                                   SplitMix64& rng) {
    std::vector<LinearCode> codes;
    codes.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) codes.push_back(random_linear_code(field, n, rng));
    return CodeTuple(std::move(codes));
}

// Integer-valued table with entries drawn uniformly from [-9, 9].
inline MatrixFunction random_integer_function(const MatrixSpace& space, SplitMix64& rng) {
    MatrixFunction f(space);
    for (std::uint64_t i = 0; i < space.points(); ++i)
        f.set_value(i, Rational(static_cast<std::int64_t>(rng.below(19)) - 9));
    return f;
}

} // namespace mwlab
