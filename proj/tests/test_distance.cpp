#include <doctest.h>

#include <atomic>

#include "mtcodes/distance.hpp"
#include "mtcodes/rng.hpp"

using namespace mtcodes;

namespace {

GenMatrix random_full_rank(const PrimeField& f, std::size_t k, std::size_t n, SplitMix64& rng) {
    for (;;) {
        GenMatrix m(f, k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m.at(r, c) = static_cast<std::uint16_t>(rng.below(f.p()));
        if (rref_rank(m).second == k) return m;
    }
}

std::uint32_t weight(const std::vector<std::uint16_t>& v) {
    std::uint32_t w = 0;
    for (auto x : v) w += (x != 0);
    return w;
}

}  // namespace

TEST_CASE("identity and repetition codes") {
    const PrimeField f5(5);
    const DistanceResult id = min_distance_exhaustive(GenMatrix::identity(f5, 4), 1 << 20);
    CHECK(id.d == 1);
    CHECK(weight(id.witness) == 1);

    const DistanceResult bz_id = min_distance_bz(GenMatrix::identity(f5, 4));
    CHECK(bz_id.d == 1);

    const PrimeField f3(3);
    const GenMatrix rep = GenMatrix::from_rows(f3, {std::vector<std::uint16_t>(9, 1)});
    CHECK(min_distance_exhaustive(rep, 100).d == 9);
    CHECK(min_distance_bz(rep).d == 9);
}

TEST_CASE("error conditions") {
    const PrimeField f3(3);
    const GenMatrix rank_def = GenMatrix::from_rows(f3, {{1, 2, 0}, {2, 1, 0}});
    CHECK_THROWS_AS(min_distance_exhaustive(rank_def, 1 << 20), Error);
    CHECK_THROWS_AS(min_distance_bz(rank_def), Error);

    const GenMatrix ok = GenMatrix::from_rows(f3, {{1, 2, 0}, {0, 1, 1}});
    CHECK_THROWS_AS(min_distance_exhaustive(ok, 3), Error);  // 3^2 - 1 = 8 > 3
}

TEST_CASE("engines agree on random codes") {
    SplitMix64 rng(0xD15C);
    const std::uint32_t primes[] = {2, 3, 5, 7};
    for (int trial = 0; trial < 60; ++trial) {
        const PrimeField f(primes[rng.below(4)]);
        const std::size_t k = 2 + rng.below(4);
        const std::size_t n = k + 2 + rng.below(8);
        if (nonzero_message_count(f.p(), static_cast<std::uint32_t>(k)) > 100000) continue;
        const GenMatrix m = random_full_rank(f, k, n, rng);
        const DistanceResult ex = min_distance_exhaustive(m, 1 << 20);
        const DistanceResult bz = min_distance_bz(m);
        CHECK(ex.d == bz.d);
        CHECK(weight(ex.witness) == ex.d);
        CHECK(weight(bz.witness) == bz.d);
        CHECK(in_row_space(m, ex.witness));
        CHECK(in_row_space(m, bz.witness));
        CHECK(ex.d <= m.cols() - k + 1);  // Singleton
    }
}

TEST_CASE("distance is invariant under row operations and column permutations") {
    SplitMix64 rng(0xABCD);
    const PrimeField f5(5);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t k = 3, n = 9;
        const GenMatrix m = random_full_rank(f5, k, n, rng);
        const std::uint32_t d = min_distance_exhaustive(m, 1 << 20).d;

        // random invertible row mix
        GenMatrix mixed = m;
        for (int step = 0; step < 10; ++step) {
            const std::size_t src = rng.below(k), dst = rng.below(k);
            if (src == dst) continue;
            const std::uint32_t c = 1 + rng.below(f5.p() - 1);
            for (std::size_t col = 0; col < n; ++col)
                mixed.at(dst, col) = static_cast<std::uint16_t>(
                    f5.add(mixed.at(dst, col), f5.mul(c, mixed.at(src, col))));
        }
        CHECK(min_distance_exhaustive(mixed, 1 << 20).d == d);

        // column permutation (rotate + swap)
        GenMatrix perm(f5, k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) perm.at(r, (c + 3) % n) = m.at(r, c);
        CHECK(min_distance_bz(perm).d == d);
    }
}

TEST_CASE("results are identical for any worker count") {
    SplitMix64 rng(0xF00D);
    const PrimeField f3(3);
    const GenMatrix m = random_full_rank(f3, 6, 14, rng);

    DistanceOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const DistanceResult e1 = min_distance_exhaustive(m, 1 << 20, one);
    const DistanceResult e4 = min_distance_exhaustive(m, 1 << 20, four);
    CHECK(e1.d == e4.d);
    CHECK(e1.witness == e4.witness);

    const DistanceResult b1 = min_distance_bz(m, one);
    const DistanceResult b4 = min_distance_bz(m, four);
    CHECK(b1.d == b4.d);
    CHECK(b1.witness == b4.witness);
}

TEST_CASE("auto dispatch and progress reporting") {
    const PrimeField f3(3);
    std::atomic<double> progress{0.0};
    DistanceOptions opts;
    opts.progress = &progress;

    const DistanceResult small = min_distance(GenMatrix::identity(f3, 3), opts);
    CHECK(small.method == std::string("exhaustive"));
    CHECK(progress.load() == 1.0);

    // 3^15 - 1 > 2^22 forces the information-set engine
    progress = 0.0;
    const DistanceResult big = min_distance(GenMatrix::identity(f3, 15), opts);
    CHECK(big.method == std::string("bz"));
    CHECK(big.d == 1);
    CHECK(progress.load() == 1.0);
}

TEST_CASE("uint16 kernel path (p > 255) matches expectations") {
    const PrimeField f257(257);
    GenMatrix m = GenMatrix::from_rows(f257, {{1, 0, 256, 3}, {0, 1, 1, 1}});
    const DistanceResult ex = min_distance_exhaustive(m, 1 << 20);
    const DistanceResult bz = min_distance_bz(m);
    CHECK(ex.d == bz.d);
    // every codeword (a, b, b-a, 3a+b) has at least three nonzero coordinates
    CHECK(ex.d == 3);
}
