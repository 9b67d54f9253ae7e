#include <doctest.h>

#include "mtcodes/constacyclic.hpp"
#include "mtcodes/distance.hpp"
#include "mtcodes/factorize.hpp"
#include "mtcodes/mtcode.hpp"
#include "mtcodes/rng.hpp"

using namespace mtcodes;

namespace {

std::vector<std::uint16_t> apply_shifts(std::vector<std::uint16_t> v,
                                        const std::vector<MTBlock>& blocks, std::uint32_t times) {
    for (std::uint32_t i = 0; i < times; ++i) v = mt_shift(v, blocks);
    return v;
}

}  // namespace

TEST_CASE("mt shift definition") {
    const PrimeField f3(3);
    const std::vector<MTBlock> blocks{MTBlock(2, f3.element(2)), MTBlock(3, f3.element(1))};
    const std::vector<std::uint16_t> v{1, 2, 1, 0, 2};
    CHECK(mt_shift(v, blocks) == std::vector<std::uint16_t>{1, 1, 2, 1, 0});

    CHECK_THROWS_AS(mt_shift({1, 2, 3}, blocks), Error);

    // single block with a = 1: plain cyclic shift, period m
    const std::vector<MTBlock> cyclic{MTBlock(4, f3.element(1))};
    const std::vector<std::uint16_t> w{1, 2, 0, 1};
    CHECK(apply_shifts(w, cyclic, 4) == w);

    // single block, general a: m shifts multiply by a, so the period is
    // m * order(a)
    const PrimeField f7(7);
    const std::vector<MTBlock> twisted{MTBlock(3, f7.element(4))};
    const std::vector<std::uint16_t> u{1, 5, 2};
    std::vector<std::uint16_t> scaled(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        scaled[i] = static_cast<std::uint16_t>(f7.mul(4, u[i]));
    CHECK(apply_shifts(u, twisted, 3) == scaled);
    CHECK(apply_shifts(u, twisted, 3 * elem_order(f7.element(4))) == u);
}

TEST_CASE("annihilator") {
    const PrimeField f3(3);

    // single block: the annihilator of g is the check polynomial
    const Poly g = Poly::from_coeffs(f3, {2, 1});  // divides x^4 - 1
    const MTGenerator single({MTBlock(4, f3.element(1))}, {g});
    const Poly h = poly_divmod(Poly::binomial_xn_minus_a(f3, 4, 1), g).first;
    CHECK(mt_annihilator(single) == h.monic());

    // coprime block binomials: annihilator is h1 * h2
    const PrimeField f5(5);
    const Binomial b1(2, f5.element(1)), b2(3, f5.element(2));
    REQUIRE(binomial_gcd(b1, b2) == Poly::one(f5));
    const Poly g1 = Poly::from_coeffs(f5, {4, 1});  // x - 1 | x^2 - 1
    REQUIRE(poly_divides(g1, b1.to_poly()));
    const MTGenerator pair({MTBlock(2, f5.element(1)), MTBlock(3, f5.element(2))},
                           {g1, Poly::one(f5)});
    const Poly h1 = poly_divmod(b1.to_poly(), g1).first;
    CHECK(mt_annihilator(pair) == (h1 * b2.to_poly()).monic());

    CHECK_THROWS_AS(
        mt_annihilator(MTGenerator({MTBlock(4, f3.element(1))}, {Poly::zero(f3)})), Error);

    // annihilator kills the generator blockwise, and no proper divisor does
    SplitMix64 rng(0xA11);
    for (int trial = 0; trial < 80; ++trial) {
        const std::uint32_t p = trial % 2 ? 3 : 5;
        const PrimeField f(p);
        std::vector<MTBlock> blocks;
        std::vector<Poly> polys;
        const std::size_t nblocks = 1 + rng.below(3);
        bool any_nonzero = false;
        for (std::size_t i = 0; i < nblocks; ++i) {
            std::uint32_t m = 2 + static_cast<std::uint32_t>(rng.below(6));
            while (m % p == 0) ++m;
            blocks.emplace_back(m, f.element(1 + static_cast<std::int64_t>(rng.below(p - 1))));
            std::vector<std::uint16_t> c(rng.below(m) + 1);
            for (auto& v : c) v = static_cast<std::uint16_t>(rng.below(p));
            polys.push_back(Poly::from_residues(f, std::move(c)));
            any_nonzero |= !polys.back().is_zero();
        }
        if (!any_nonzero) continue;
        const MTGenerator gen(blocks, polys);
        const Poly ann = mt_annihilator(gen);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            CHECK(reduce_mod_binomial(ann * gen.polys()[i], blocks[i].m, blocks[i].a.value())
                      .is_zero());
        // strip one irreducible factor at a time; the result must not annihilate
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].m % p == 0) continue;
            const Factorization fact = factor_binomial(Binomial(blocks[i].m, blocks[i].a));
            for (const Poly& factor : fact.factors) {
                if (!poly_divides(factor, ann)) continue;
                const Poly reduced_ann = poly_divmod(ann, factor).first;
                bool kills_all = true;
                for (std::size_t j = 0; j < blocks.size(); ++j)
                    kills_all &= reduce_mod_binomial(reduced_ann * gen.polys()[j], blocks[j].m,
                                                     blocks[j].a.value())
                                     .is_zero();
                CHECK_FALSE(kills_all);
            }
        }
    }
}

TEST_CASE("full code matches the constacyclic realization on one block") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const PrimeField f(p);
        for (std::uint32_t m = 2; m <= 12; ++m) {
            if (m % p == 0) continue;
            for (std::uint32_t a_val = 1; a_val < p; ++a_val) {
                const FieldElement a = f.element(a_val);
                const Factorization fact = factor_binomial(Binomial(m, a));
                for (const Poly& g : divisor_products(fact, 4096)) {
                    if (g.degree() >= static_cast<int>(m)) continue;
                    const ConstacyclicCode cc = ConstacyclicCode::make(m, a, g);
                    const MTCode mt = make_mt_code(MTGenerator({MTBlock(m, a)}, {g}));
                    CHECK(mt.params().k == cc.dim());
                    CHECK(same_row_space(mt.matrix(), cc.genmatrix()));
                }
            }
        }
    }
}

TEST_CASE("full code dimension equals the annihilator degree on random generators") {
    SplitMix64 rng(0x500);
    int checked = 0;
    while (checked < 500) {
        const std::uint32_t p = (checked % 3 == 0) ? 5 : 3;
        const PrimeField f(p);
        const std::size_t nblocks = 1 + rng.below(3);
        std::vector<MTBlock> blocks;
        std::vector<Poly> polys;
        bool any_nonzero = false;
        for (std::size_t i = 0; i < nblocks; ++i) {
            const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng.below(7));
            blocks.emplace_back(m, f.element(1 + static_cast<std::int64_t>(rng.below(p - 1))));
            std::vector<std::uint16_t> c(rng.below(m) + 1);
            for (auto& v : c) v = static_cast<std::uint16_t>(rng.below(p));
            polys.push_back(Poly::from_residues(f, std::move(c)));
            any_nonzero |= !polys.back().is_zero();
        }
        if (!any_nonzero) continue;
        const MTGenerator gen(blocks, polys);
        const MTCode code = make_mt_code(gen);  // throws RankMismatch on disagreement
        CHECK(code.params().k == static_cast<std::uint32_t>(mt_annihilator(gen).degree()));
        CHECK(code.params().n == gen.total_length());

        // row space closed under the twisted shift
        const GenMatrix& m = code.matrix();
        for (std::size_t r = 0; r < m.rows(); ++r)
            CHECK(in_row_space(m, mt_shift(m.row_vec(r), gen.blocks())));
        ++checked;
    }
}

TEST_CASE("subcodes") {
    const PrimeField f3(3);
    const Poly g = Poly::from_coeffs(f3, {2, 1});
    const MTGenerator gen({MTBlock(4, f3.element(1)), MTBlock(2, f3.element(2))},
                          {g, Poly::one(f3)});

    const MTCode one_dim = mt_subcode(gen, 1);
    CHECK(one_dim.params().k == 1);
    CHECK(one_dim.matrix().rows() == 1);

    const MTCode full = make_mt_code(gen);
    for (std::uint32_t k = 1; k <= full.params().k; ++k) {
        const MTCode sub = mt_subcode(gen, k);
        // subcode rows live inside the full span
        for (std::size_t r = 0; r < sub.matrix().rows(); ++r)
            CHECK(in_row_space(full.matrix(), sub.matrix().row_vec(r)));
    }

    // requesting more independent shifts than exist reports the first bad index
    const std::uint32_t limit = full.params().k;
    try {
        mt_subcode(gen, limit + 1);
        FAIL("expected DependentShifts");
    } catch (const Error& e) {
        CHECK(e.code() == errc::dependent_shifts);
        CHECK(std::string(e.what()).find(std::to_string(limit)) != std::string::npos);
    }

    CHECK_THROWS_AS(mt_subcode(gen, 0), Error);
}
