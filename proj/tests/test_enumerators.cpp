#include "mwlab/enumerators.hpp"
#include "mwlab/random.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace mwlab;

namespace {

LinearCode make_code(std::uint64_t q, std::uint32_t n, std::vector<Word> rows) {
    return LinearCode::from_generator(Field::make(q), n, rows);
}

WeightEnumerator we(std::uint32_t n, std::vector<BigInt> coeffs) {
    return WeightEnumerator(n, std::move(coeffs));
}

} // namespace

TEST_CASE("weight enumerator basics") {
    LinearCode rep3 = make_code(2, 3, {{1, 1, 1}});
    WeightEnumerator w = weight_enumerator(rep3);
    CHECK(w == we(3, {1, 0, 0, 1}));
    CHECK(w.total() == 2);
    CHECK(w.eval(Rational(1, 2)) == Rational(9, 8));
    CHECK(homogeneous_eval(w, 1, Rational(1, 2)) == Rational(9, 8));
    CHECK(homogeneous_eval(w, 2, 1) == 9);  // 2^3 + 1

    CHECK_THROWS_AS(we(2, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(we(1, {BigInt(-1), BigInt(1)}), std::invalid_argument);
    CHECK_THROWS_AS(WeightEnumerator(0), std::invalid_argument);
}

TEST_CASE("weight enumerators match the ambient scan") {
    SplitMix64 rng(23);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 9ull}) {
        FieldPtr field = Field::make(q);
        for (int rep = 0; rep < 4; ++rep) {
            std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(3));
            LinearCode c = random_linear_code(field, n, rng);
            CHECK(weight_enumerator(c) == oracles::scan_weight_enumerator(c));
        }
    }
}

TEST_CASE("transform of the repetition code") {
    WeightEnumerator w = we(3, {1, 0, 0, 1});
    WeightEnumerator b = macwilliams_transform(w, 2, BigInt(2));
    CHECK(b == we(3, {1, 0, 3, 0}));
    // and back: the transform is an involution with the dual parameters
    CHECK(macwilliams_transform(b, 2, BigInt(4)) == w);
}

TEST_CASE("transform rejects non-enumerator input") {
    // (1/3)[(1+z) + (1-z)] has no integer coefficient expansion
    CHECK_THROWS_AS(macwilliams_transform(we(1, {1, 1}), 2, BigInt(3)), std::invalid_argument);
    // negative intermediate coefficients are impossible for genuine enumerators
    CHECK_THROWS_AS(macwilliams_transform(we(1, {0, 2}), 2, BigInt(2)), std::invalid_argument);
    CHECK_THROWS_AS(macwilliams_transform(we(1, {1, 0}), 1, BigInt(1)), std::invalid_argument);
    CHECK_THROWS_AS(macwilliams_transform(we(1, {1, 0}), 2, BigInt(0)), std::invalid_argument);
}

TEST_CASE("transform equals dual enumeration for single codes") {
    SplitMix64 rng(31);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 8ull}) {
        FieldPtr field = Field::make(q);
        for (int rep = 0; rep < 5; ++rep) {
            std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(4));
            LinearCode c = random_linear_code(field, n, rng);
            WeightEnumerator direct = weight_enumerator(c.dual());
            WeightEnumerator transformed =
                macwilliams_transform(weight_enumerator(c), field->q(), c.size());
            CHECK(transformed == direct);
        }
    }
}

TEST_CASE("effective length enumerator of a stacked tuple") {
    LinearCode rep3 = make_code(2, 3, {{1, 1, 1}});
    CodeTuple pair({rep3, rep3});
    WeightEnumerator w = effective_length_enumerator(pair);
    CHECK(w == we(3, {1, 0, 0, 3}));

    // single-code tuples reduce to the Hamming enumerator
    CodeTuple single({rep3});
    CHECK(effective_length_enumerator(single) == weight_enumerator(rep3));
}

TEST_CASE("tuple transform against brute-force dual tuples") {
    LinearCode rep3 = make_code(2, 3, {{1, 1, 1}});
    LinearCode even3 = rep3.dual();
    MacWilliamsCheck chk = verify_macwilliams(CodeTuple({rep3, even3}));
    CHECK(chk.equal);
    CHECK(chk.transformed == chk.direct);
    CHECK(chk.primal.total() == 8);

    SplitMix64 rng(57);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 9ull}) {
        FieldPtr field = Field::make(q);
        for (int rep = 0; rep < 3; ++rep) {
            std::uint32_t m = 1 + static_cast<std::uint32_t>(rng.below(3));
            CodeTuple tuple = random_code_tuple(field, m, 2, rng);
            CHECK(verify_macwilliams(tuple).equal);
        }
    }
}

TEST_CASE("worked transform identity for the F4 line code") {
    LinearCode c = make_code(4, 2, {{1, 2}});
    WeightEnumerator w = weight_enumerator(c);
    CHECK(w == we(2, {1, 0, 3}));
    CHECK(macwilliams_transform(w, 4, BigInt(4)) == we(2, {1, 0, 3}));
    CHECK(verify_macwilliams(CodeTuple({c})).equal);
}
