#include "mwlab/codes.hpp"
#include "mwlab/errors.hpp"
#include "mwlab/random.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace mwlab;

namespace {

LinearCode make_code(std::uint64_t q, std::uint32_t n, std::vector<Word> rows) {
    return LinearCode::from_generator(Field::make(q), n, rows);
}

} // namespace

TEST_CASE("generator matrices are brought to reduced row echelon form") {
    LinearCode c = make_code(2, 3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(c.k() == 2);
    CHECK(c.pivots() == std::vector<std::uint32_t>{0, 1});
    CHECK(c.generator_rows() == std::vector<Word>{{1, 0, 1}, {0, 1, 1}});

    // duplicate and zero rows collapse
    LinearCode r = make_code(2, 3, {{1, 1, 1}, {1, 1, 1}, {0, 0, 0}});
    CHECK(r.k() == 1);
    CHECK(r.size() == 2);

    // pivot normalization over F_3: scale (2,1) by inv(2)
    LinearCode s = make_code(3, 2, {{2, 1}});
    CHECK(s.generator_rows() == std::vector<Word>{{1, 2}});

    // equal codes from different generating sets compare equal
    CHECK(make_code(2, 3, {{1, 0, 1}, {0, 1, 1}}) == make_code(2, 3, {{1, 1, 0}, {1, 0, 1}}));
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(make_code(2, 3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_code(2, 3, {{1, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_code(2, 0, {}), std::invalid_argument);
    CHECK_NOTHROW(make_code(2, 3, {}));  // zero code
}

TEST_CASE("codeword enumeration matches scalar spans in extension fields") {
    // message order for one generator (1, x) over F_4: multiples by 0, 1, x, x+1
    LinearCode c = make_code(4, 2, {{1, 2}});
    CHECK(c.codewords() == std::vector<Word>{{0, 0}, {1, 2}, {2, 3}, {3, 1}});

    LinearCode t = make_code(3, 2, {{1, 2}});
    CHECK(t.codewords() == std::vector<Word>{{0, 0}, {1, 2}, {2, 1}});
}

TEST_CASE("codeword walks visit each codeword exactly once") {
    SplitMix64 rng(41);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 8ull, 9ull}) {
        FieldPtr field = Field::make(q);
        for (int rep = 0; rep < 3; ++rep) {
            LinearCode c = random_linear_code(field, 3, rng);
            std::set<Word> seen;
            c.for_each_codeword([&](const Word& w) {
                CHECK(c.contains(w));
                seen.insert(w);
            });
            CHECK(BigInt(seen.size()) == c.size());
        }
    }
}

TEST_CASE("membership testing") {
    LinearCode rep3 = make_code(2, 3, {{1, 1, 1}});
    CHECK(rep3.contains({0, 0, 0}));
    CHECK(rep3.contains({1, 1, 1}));
    CHECK_FALSE(rep3.contains({1, 0, 0}));
    CHECK_THROWS_AS(rep3.contains({1, 1}), std::invalid_argument);
}

TEST_CASE("dual codes agree with the orthogonality scan") {
    LinearCode rep3 = make_code(2, 3, {{1, 1, 1}});
    LinearCode d = rep3.dual();
    CHECK(d.k() == 2);
    CHECK(d == oracles::brute_force_dual(rep3));
    CHECK(d.dual() == rep3);

    SplitMix64 rng(7);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 8ull, 9ull}) {
        FieldPtr field = Field::make(q);
        for (int rep = 0; rep < 4; ++rep) {
            std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(3));
            LinearCode c = random_linear_code(field, n, rng);
            LinearCode dual = c.dual();
            CHECK(dual == oracles::brute_force_dual(c));
            CHECK(dual.dual() == c);
            CHECK(c.size() * dual.size() == pow_int(BigInt(q), n));
        }
    }
}

TEST_CASE("coset representatives hit every coset once") {
    SplitMix64 rng(19);
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        FieldPtr field = Field::make(q);
        for (int rep = 0; rep < 3; ++rep) {
            LinearCode c = random_linear_code(field, 3, rng);
            std::vector<Word> reps = c.coset_representatives();
            CHECK(BigInt(reps.size()) * c.size() == pow_int(BigInt(q), 3));
            CHECK(reps.front() == Word(3, 0));
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = i + 1; j < reps.size(); ++j) {
                    Word diff(3);
                    for (std::uint32_t t = 0; t < 3; ++t)
                        diff[t] = field->sub(reps[i][t], reps[j][t]);
                    CHECK_FALSE(c.contains(diff));
                }
        }
    }
}

TEST_CASE("enumeration budgets are enforced") {
    LinearCode c = make_code(2, 20, {Word(20, 1)});
    CHECK_THROWS_AS(c.for_each_codeword([](const Word&) {}, 1), budget_error);
    CHECK_THROWS_AS(c.coset_representatives(1000), budget_error);
    CHECK_NOTHROW(c.for_each_codeword([](const Word&) {}, 2));
}

TEST_CASE("code tuples pair rows with codes") {
    LinearCode rep3 = make_code(2, 3, {{1, 1, 1}});
    LinearCode full3 = make_code(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CodeTuple tuple({rep3, full3});
    CHECK(tuple.m() == 2);
    CHECK(tuple.n() == 3);
    CHECK(tuple.size() == 16);

    std::set<std::vector<fq_t>> seen;
    tuple.for_each_matrix([&](const CodeMatrix& x) {
        CHECK(tuple.contains(x));
        seen.insert(x.a);
    });
    CHECK(BigInt(seen.size()) == tuple.size());

    CodeTuple dual = tuple.dual();
    CHECK(dual.codes()[0] == rep3.dual());
    CHECK(dual.codes()[1] == full3.dual());

    CHECK_THROWS_AS(CodeTuple({rep3, make_code(2, 2, {{1, 1}})}), std::invalid_argument);
    CHECK_THROWS_AS(CodeTuple({rep3, make_code(3, 3, {{1, 1, 1}})}), std::invalid_argument);
    CHECK_THROWS_AS(CodeTuple({}), std::invalid_argument);
}

TEST_CASE("effective length counts nonzero columns") {
    CodeMatrix x(2, 3);
    x.a = {1, 0, 1, 0, 0, 2};
    CHECK(effective_length_weight(x) == 2);
    CHECK(hamming_weight({0, 1, 0, 2}) == 2);
}

TEST_CASE("splitmix64 matches the reference stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafull);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ull);
    CHECK(rng.next() == 0x06c45d188009454full);
    CHECK(rng.next() == 0xf88bb8a8724c81ecull);
    CHECK(rng.next() == 0x1b39896a51a8749bull);

    SplitMix64 a(1234), b(1234);
    for (int i = 0; i < 100; ++i) CHECK(a.below(97) == b.below(97));
}

TEST_CASE("random codes are reproducible per seed") {
    FieldPtr f3 = Field::make(3);
    SplitMix64 a(99), b(99);
    for (int i = 0; i < 10; ++i) CHECK(random_linear_code(f3, 4, a) == random_linear_code(f3, 4, b));
}
