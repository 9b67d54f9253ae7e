#include <doctest.h>

#include "mtcodes/field.hpp"

using namespace mtcodes;

TEST_CASE("prime field construction") {
    CHECK(PrimeField(7).p() == 7);
    CHECK(PrimeField(2).p() == 2);
    CHECK(PrimeField(65521).p() == 65521);  // largest prime below 2^16
    CHECK_THROWS_AS(PrimeField(6), Error);
    CHECK_THROWS_AS(PrimeField(1), Error);
    CHECK_THROWS_AS(PrimeField(0), Error);
    CHECK_THROWS_AS(PrimeField(65536 - 1), Error);  // 65535 = 3*5*17*257

    try {
        PrimeField(6);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_prime);
    }
}

TEST_CASE("residue arithmetic and reductions") {
    const PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.mul(4, 5) == 6);
    CHECK(f.neg(3) == 4);
    CHECK(f.reduce_int(-2) == 5);
    CHECK(f.reduce_int(-7) == 0);
    CHECK(f.pow(3, 0) == 1);
    CHECK(f.pow(3, 6) == 1);
    CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("element order") {
    const PrimeField f7(7);
    CHECK(elem_order(f7.one()) == 1);

    // order of 4: repeated multiplication gives 4, 2, 1
    std::uint32_t acc = 4, steps = 1;
    while (acc != 1) {
        acc = f7.mul(acc, 4);
        ++steps;
    }
    CHECK(steps == 3);
    CHECK(elem_order(f7.element(4)) == 3);
    CHECK(elem_order(f7.element(3)) == 6);  // 3 generates GF(7)*

    CHECK_THROWS_AS(elem_order(f7.zero()), Error);
}

TEST_CASE("order divides p - 1 and inverses hold for all small fields") {
    for (std::uint32_t p = 2; p <= 100; ++p) {
        if (!is_prime_u32(p)) continue;
        const PrimeField f(p);
        for (std::uint32_t a = 1; a < p; ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK((p - 1) % elem_order(f.element(a)) == 0);
        }
    }
}

TEST_CASE("cross-field arithmetic is rejected") {
    const PrimeField f3(3), f5(5);
    const FieldElement a = f3.element(2);
    const FieldElement b = f5.element(2);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
    CHECK(a == f3.element(-1));
    CHECK_FALSE(a == b);
}

TEST_CASE("negative powers go through the inverse") {
    const PrimeField f7(7);
    const FieldElement a = f7.element(4);
    CHECK((a.pow(-1) * a) == f7.one());
    CHECK(a.pow(-2) == a.inverse() * a.inverse());
}
