#include "mwlab/random.hpp"
#include "mwlab/transforms.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace mwlab;

namespace {

LinearCode make_code(std::uint64_t q, std::uint32_t n, std::vector<Word> rows) {
    return LinearCode::from_generator(Field::make(q), n, rows);
}

} // namespace

TEST_CASE("matrix space indexing round trips") {
    MatrixSpace sp(Field::make(3), 2, 2);
    CHECK(sp.points() == 81);
    for (std::uint64_t i = 0; i < sp.points(); ++i) CHECK(sp.index_of(sp.matrix_at(i)) == i);
    CHECK(sp.matrix_at(0) == CodeMatrix(2, 2));
    CHECK_THROWS_AS(sp.matrix_at(81), std::invalid_argument);
    CHECK_THROWS_AS(MatrixSpace(Field::make(2), 5, 4, 1 << 16), budget_error);
    CHECK_THROWS_AS(MatrixSpace(Field::make(2), 0, 4), std::invalid_argument);
}

TEST_CASE("pairing is the entrywise dot product") {
    FieldPtr f = Field::make(3);
    CodeMatrix x(1, 2), y(1, 2);
    x.a = {1, 2};
    y.a = {2, 2};
    CHECK(matrix_pairing(*f, x, y) == 0);  // 2 + 4 = 6 = 0 mod 3
    y.a = {1, 1};
    CHECK(matrix_pairing(*f, x, y) == 0);
    y.a = {2, 1};
    CHECK(matrix_pairing(*f, x, y) == 1);
}

TEST_CASE("fast transform equals the quadratic scan") {
    SplitMix64 rng(3);
    struct Shape {
        std::uint64_t q;
        std::uint32_t m, n;
    };
    for (Shape s : {Shape{2, 1, 3}, Shape{2, 2, 2}, Shape{3, 2, 1}, Shape{4, 1, 2},
                    Shape{5, 1, 2}, Shape{8, 1, 1}, Shape{9, 1, 1}, Shape{7, 1, 2}}) {
        MatrixSpace sp(Field::make(s.q), s.m, s.n);
        MatrixFunction f = random_integer_function(sp, rng);
        MatrixFunction ft = finite_fourier_transform(f);
        CHECK(ft == oracles::naive_fourier_transform(f));
        CHECK(inverse_fourier_transform(ft) == f);
        CHECK(oracles::naive_fourier_transform(ft, true) == f);
    }
}

TEST_CASE("transform handles rational values and large coefficients") {
    MatrixSpace sp(Field::make(3), 1, 2);
    MatrixFunction f(sp);
    BigInt huge = pow_int(BigInt(10), 30);
    for (std::uint64_t i = 0; i < sp.points(); ++i) {
        // mix of fractions and values far past the int64 fast path
        Rational v = Rational(BigInt(3 * i + 1) * huge, BigInt(2 * i + 3));
        f.set_value(i, v);
    }
    MatrixFunction ft = finite_fourier_transform(f);
    CHECK(ft == oracles::naive_fourier_transform(f));
    CHECK(inverse_fourier_transform(ft) == f);
}

TEST_CASE("transform of a cyclotomic-valued table") {
    MatrixSpace sp(Field::make(2), 1, 3);
    SplitMix64 rng(11);
    MatrixFunction f(sp);
    for (std::uint64_t i = 0; i < sp.points(); ++i) {
        std::vector<Rational> c{Rational(static_cast<std::int64_t>(rng.below(7)) - 3),
                                Rational(static_cast<std::int64_t>(rng.below(7)) - 3)};
        f.set_value(i, CycRat::from_coeffs(2, std::move(c)));
    }
    CHECK(finite_fourier_transform(f) == oracles::naive_fourier_transform(f));
}

TEST_CASE("characteristic function transforms to the scaled dual") {
    LinearCode rep3 = make_code(2, 3, {{1, 1, 1}});
    CodeTuple tuple({rep3});
    MatrixSpace sp(tuple.field(), 1, 3);

    CodeMatrix in_dual(1, 3), off_dual(1, 3);
    in_dual.a = {1, 1, 0};
    off_dual.a = {1, 0, 0};
    CHECK(ft_characteristic_at(tuple, in_dual) == CycInt::constant(2, BigInt(2)));
    CHECK(ft_characteristic_at(tuple, off_dual) == CycInt(2));
    CHECK(verify_ft_characteristic(tuple));

    SplitMix64 rng(13);
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        FieldPtr field = Field::make(q);
        for (int rep = 0; rep < 3; ++rep) {
            CodeTuple t = random_code_tuple(field, 2, 2, rng);
            CHECK(verify_ft_characteristic(t));
        }
    }
}

TEST_CASE("closed form of the effective-length power transform") {
    // F_2, n = 1: FT z^{ew} is 1+z at 0 and 1-z at 1
    FieldPtr f2 = Field::make(2);
    CodeMatrix zero(1, 1), one(1, 1);
    one.a = {1};
    Rational z(1, 3);
    CHECK(ft_ew_closed_form(*f2, zero, z) == Rational(4, 3));
    CHECK(ft_ew_closed_form(*f2, one, z) == Rational(2, 3));

    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 8ull, 9ull}) {
        for (std::uint32_t m : {1u, 2u}) {
            MatrixSpace sp(Field::make(q), m, 2, 1 << 16);
            for (Rational zz : {Rational(1, 3), Rational(1, 2), Rational(2, 5)}) {
                CHECK(verify_ew_transform(sp, zz));
            }
        }
    }
}

TEST_CASE("summing a function over a tuple equals its scaled dual sum") {
    LinearCode rep3 = make_code(2, 3, {{1, 1, 1}});
    LinearCode even3 = rep3.dual();
    CodeTuple tuple({rep3, even3});
    MatrixSpace sp(tuple.field(), 2, 3);

    SplitMix64 rng(17);
    for (int rep = 0; rep < 5; ++rep) {
        MatrixFunction f = random_integer_function(sp, rng);
        PoissonCheck chk = poisson_check(tuple, f);
        CHECK(chk.equal);
        CHECK(chk.dual_sum == chk.scaled_sum);
    }

    // zero tuple: dual side sums f over everything, primal side picks FT at 0
    LinearCode zero2 = make_code(3, 2, {});
    CodeTuple ztuple({zero2});
    MatrixSpace zsp(ztuple.field(), 1, 2);
    MatrixFunction f = random_integer_function(zsp, rng);
    CHECK(poisson_check(ztuple, f).equal);

    MatrixSpace wrong(Field::make(2), 2, 2);
    MatrixFunction g(wrong);
    CHECK_THROWS_AS(poisson_check(tuple, g), std::invalid_argument);
}
