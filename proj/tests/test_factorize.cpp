#include <doctest.h>

#include <numeric>

#include "mtcodes/factorize.hpp"
#include "mtcodes/rng.hpp"

using namespace mtcodes;

namespace {

std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

// exhaustive trial-division irreducibility oracle
bool irreducible_by_trial_division(const Poly& f) {
    const PrimeField& fld = f.field();
    const int d = f.degree();
    for (int deg = 1; 2 * deg <= d; ++deg) {
        // all monic candidates of this degree
        std::vector<std::uint16_t> c(static_cast<std::size_t>(deg) + 1, 0);
        c.back() = 1;
        std::uint64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= fld.p();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t v = idx;
            for (int i = 0; i < deg; ++i) {
                c[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v % fld.p());
                v /= fld.p();
            }
            const Poly candidate = Poly::from_residues(fld, c);
            if (poly_divides(candidate, f)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("mult_order") {
    // oracle: direct powering
    std::uint64_t acc = 3 % 8, k = 1;
    while (acc != 1) {
        acc = acc * 3 % 8;
        ++k;
    }
    CHECK(k == 2);
    CHECK(mult_order(3, 8) == 2);
    CHECK(mult_order(2, 5) == 4);  // powers 2, 4, 3, 1
    CHECK(mult_order(7, 1) == 1);
    CHECK_THROWS_AS(mult_order(6, 8), Error);

    SplitMix64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t m = 2 + rng.below(400);
        const std::uint64_t q = 2 + rng.below(100);
        if (std::gcd(q, m) != 1) continue;
        CHECK(euler_phi(m) % mult_order(q, m) == 0);
    }
}

TEST_CASE("binomial type") {
    const PrimeField f7(7);
    CHECK_THROWS_AS(Binomial(5, f7.zero()), Error);
    CHECK(Binomial(5, f7.element(2)).coprime_regime());
    CHECK_FALSE(Binomial(14, f7.element(2)).coprime_regime());
}

TEST_CASE("factor_binomial examples") {
    const PrimeField f7(7), f5(5), f3(3);

    const Factorization lin = factor_binomial(Binomial(1, f7.element(5)));
    REQUIRE(lin.factors.size() == 1);
    CHECK(lin.factors[0] == Poly::from_coeffs(f7, {-5, 1}));

    // every element of GF(5)* is a 4th root of unity; canonical order sorts by
    // coefficient sequence, so x - 4 = x + 1 comes first
    const Factorization quartic = factor_binomial(Binomial(4, f5.element(1)));
    REQUIRE(quartic.factors.size() == 4);
    CHECK(quartic.factors[0] == Poly::from_coeffs(f5, {1, 1}));
    CHECK(quartic.factors[1] == Poly::from_coeffs(f5, {2, 1}));
    CHECK(quartic.factors[2] == Poly::from_coeffs(f5, {3, 1}));
    CHECK(quartic.factors[3] == Poly::from_coeffs(f5, {4, 1}));

    // x^20 - 2 over GF(3) admits the divisor x^6 + x^5 + x^4 + 2x + 2
    const Factorization big = factor_binomial(Binomial(20, f3.element(2)));
    Poly product = Poly::one(f3);
    for (const Poly& f : big.factors) product = product * f;
    CHECK(product == Poly::binomial_xn_minus_a(f3, 20, 2));
    CHECK(poly_divides(Poly::from_coeffs(f3, {2, 2, 0, 0, 1, 1, 1}),
                       Poly::binomial_xn_minus_a(f3, 20, 2)));

    CHECK_THROWS_AS(factor_binomial(Binomial(6, f3.element(1))), Error);
}

TEST_CASE("is_irreducible") {
    const PrimeField f3(3);
    CHECK(is_irreducible(Poly::from_coeffs(f3, {1, 0, 1})));        // x^2 + 1
    CHECK_FALSE(is_irreducible(Poly::from_coeffs(f3, {-1, 0, 1})));  // root at 1
    CHECK_THROWS_AS(is_irreducible(Poly::one(f3)), Error);

    const Poly deg6 = Poly::from_coeffs(f3, {2, 2, 0, 0, 1, 1, 1});
    CHECK(is_irreducible(deg6) == irreducible_by_trial_division(deg6));

    // agreement with the oracle on everything small
    SplitMix64 rng(17);
    for (int i = 0; i < 120; ++i) {
        const PrimeField f(i % 2 ? 3u : 5u);
        std::vector<std::uint16_t> c(2 + rng.below(5));
        for (auto& v : c) v = static_cast<std::uint16_t>(rng.below(f.p()));
        const Poly candidate = Poly::from_residues(f, std::move(c));
        if (candidate.degree() < 1) continue;
        CHECK(is_irreducible(candidate) == irreducible_by_trial_division(candidate));
    }
}

TEST_CASE("factorization invariants across small parameter space") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const PrimeField f(p);
        for (std::uint32_t n = 1; n <= 40; ++n) {
            if (n % p == 0) continue;
            for (std::uint32_t a = 1; a < p; ++a) {
                const Factorization fact = factor_binomial(Binomial(n, f.element(a)));
                Poly product = Poly::one(f);
                for (const Poly& fac : fact.factors) {
                    CHECK(fac.is_monic());
                    CHECK(is_irreducible(fac));
                    product = product * fac;
                }
                CHECK(product == Poly::binomial_xn_minus_a(f, n, a));
                for (std::size_t i = 1; i < fact.factors.size(); ++i)
                    CHECK_FALSE(fact.factors[i - 1] == fact.factors[i]);  // sorted, so distinct
            }
        }
    }
}

TEST_CASE("binomial_gcd reference identities") {
    const PrimeField f7(7);
    CHECK(binomial_gcd(Binomial(10, f7.element(4)), Binomial(15, f7.element(1))) ==
          Poly::binomial_xn_minus_a(f7, 5, 2));
    CHECK(binomial_gcd(Binomial(11, f7.element(5)), Binomial(16, f7.element(4))) ==
          Poly::from_coeffs(f7, {-3, 1}));
    CHECK(binomial_gcd(Binomial(12, f7.element(3)), Binomial(15, f7.element(4))) ==
          Poly::one(f7));

    const PrimeField f3(3);
    CHECK_THROWS_AS(binomial_gcd(Binomial(3, f3.element(1)), Binomial(5, f3.element(1))), Error);
    CHECK_THROWS_AS(binomial_gcd(Binomial(2, f3.element(1)), Binomial(2, f7.element(1))), Error);
}

TEST_CASE("binomial_gcd structural property on random pairs") {
    SplitMix64 rng(0xB1B0);
    const std::uint32_t primes[] = {3, 5, 7, 11, 13};
    int checked = 0;
    while (checked < 400) {
        const PrimeField f(primes[rng.below(5)]);
        const std::uint32_t n1 = 1 + static_cast<std::uint32_t>(rng.below(40));
        const std::uint32_t n2 = 1 + static_cast<std::uint32_t>(rng.below(40));
        if (n1 % f.p() == 0 || n2 % f.p() == 0) continue;
        const Binomial b1(n1, f.element(1 + static_cast<std::int64_t>(rng.below(f.p() - 1))));
        const Binomial b2(n2, f.element(1 + static_cast<std::int64_t>(rng.below(f.p() - 1))));
        // binomial_gcd itself raises StructureViolation on any shape mismatch
        const Poly g = binomial_gcd(b1, b2);
        const int expected = static_cast<int>(std::gcd(n1, n2));
        CHECK((g.degree() == 0 || g.degree() == expected));
        ++checked;
    }
}

TEST_CASE("divisor enumeration") {
    const PrimeField f5(5);
    const Factorization fact = factor_binomial(Binomial(4, f5.element(1)));
    const std::vector<Poly> divisors = divisor_products(fact, 1000);
    CHECK(divisors.size() == 16);  // 2^4 subset products, all distinct here
    for (const Poly& d : divisors) CHECK(poly_divides(d, Poly::binomial_xn_minus_a(f5, 4, 1)));
}
