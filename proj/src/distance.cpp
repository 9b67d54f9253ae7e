#include "mtcodes/distance.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <thread>

namespace mtcodes {

namespace {

constexpr std::uint64_t kCountCap = std::uint64_t(1) << 62;

std::uint64_t binom_sat(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kCountCap) return kCountCap;
    }
    return static_cast<std::uint64_t>(r);
}

template <class Word>
struct LocalBest {
    std::uint32_t d = UINT32_MAX;
    std::vector<Word> witness;
    std::uint64_t enumerated = 0;

    void offer(std::uint32_t w, const Word* cw, std::size_t n) {
        if (w < d) {
            d = w;
            witness.assign(cw, cw + n);
        } else if (w == d &&
                   std::lexicographical_compare(cw, cw + n, witness.begin(), witness.end())) {
            witness.assign(cw, cw + n);
        }
    }

    void merge(const LocalBest& o) {
        enumerated += o.enumerated;
        if (o.d == UINT32_MAX) return;
        if (o.d < d) {
            d = o.d;
            witness = o.witness;
        } else if (o.d == d && std::lexicographical_compare(o.witness.begin(), o.witness.end(),
                                                            witness.begin(), witness.end())) {
            witness = o.witness;
        }
    }
};

// Rows of a generator matrix premultiplied by every nonzero scalar, so the
// inner loops are pure table-driven adds.
template <class Word>
struct ScaledRows {
    std::size_t n = 0, k = 0;
    std::uint32_t p = 0;
    std::vector<Word> data;

    void init(const GenMatrix& m) {
        n = m.cols();
        k = m.rows();
        p = m.field().p();
        data.assign(k * (p - 1) * n, 0);
        for (std::size_t r = 0; r < k; ++r)
            for (std::uint32_t s = 1; s < p; ++s) {
                Word* dst = row(r, s);
                for (std::size_t c = 0; c < n; ++c)
                    dst[c] = static_cast<Word>(static_cast<std::uint32_t>(m.at(r, c)) * s % p);
            }
    }

    Word* row(std::size_t r, std::uint32_t s) { return data.data() + (r * (p - 1) + (s - 1)) * n; }
    const Word* row(std::size_t r, std::uint32_t s) const {
        return data.data() + (r * (p - 1) + (s - 1)) * n;
    }

    void add(Word* dst, const Word* a, const Word* b) const {
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t s = static_cast<std::uint32_t>(a[i]) + b[i];
            dst[i] = static_cast<Word>(s >= p ? s - p : s);
        }
    }

    std::uint32_t add_count(Word* dst, const Word* a, const Word* b) const {
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t s = static_cast<std::uint32_t>(a[i]) + b[i];
            s = s >= p ? s - p : s;
            dst[i] = static_cast<Word>(s);
            w += (s != 0);
        }
        return w;
    }

    std::uint32_t count(const Word* a) const {
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < n; ++i) w += (a[i] != 0);
        return w;
    }
};

// ---------------------------------------------------------------------------
// Exhaustive enumeration: base-q odometer over message digits with suffix
// accumulators, so each step costs O(n) amortized.
// ---------------------------------------------------------------------------

template <class Word>
LocalBest<Word> exhaustive_range(const ScaledRows<Word>& rows, std::uint64_t begin,
                                 std::uint64_t end, std::atomic<double>* progress,
                                 std::uint64_t total) {
    const std::size_t n = rows.n;
    const std::size_t k = rows.k;
    const std::uint32_t q = rows.p;

    std::vector<std::uint32_t> digit(k, 0);
    // acc[j] = sum over t >= j of digit[t] * row_t ; acc[k] = 0
    std::vector<std::vector<Word>> acc(k + 1, std::vector<Word>(n, 0));
    {
        std::uint64_t idx = begin;
        for (std::size_t j = 0; j < k; ++j) {
            digit[j] = static_cast<std::uint32_t>(idx % q);
            idx /= q;
        }
        for (std::size_t j = k; j-- > 0;) {
            if (digit[j] == 0)
                acc[j] = acc[j + 1];
            else
                rows.add(acc[j].data(), acc[j + 1].data(), rows.row(j, digit[j]));
        }
    }

    LocalBest<Word> best;
    std::uint32_t w = rows.count(acc[0].data());
    for (std::uint64_t idx = begin;;) {
        best.offer(w, acc[0].data(), n);
        ++best.enumerated;
        if (progress && (best.enumerated & 0xFFFF) == 0)
            progress->store(std::min(1.0, static_cast<double>(best.enumerated) /
                                              static_cast<double>(total)),
                            std::memory_order_relaxed);
        if (++idx >= end) break;

        std::size_t j = 0;
        while (digit[j] == q - 1) digit[j++] = 0;
        ++digit[j];
        if (j == 0) {
            w = rows.add_count(acc[0].data(), acc[1].data(), rows.row(0, digit[0]));
        } else {
            rows.add(acc[j].data(), acc[j + 1].data(), rows.row(j, digit[j]));
            for (std::size_t t = j; t-- > 1;) std::memcpy(acc[t].data(), acc[j].data(), n * sizeof(Word));
            std::memcpy(acc[0].data(), acc[j].data(), n * sizeof(Word));
            w = rows.count(acc[0].data());
        }
    }
    return best;
}

template <class Word>
DistanceResult run_exhaustive(const GenMatrix& m, std::uint64_t total,
                              const DistanceOptions& opts) {
    ScaledRows<Word> rows;
    rows.init(m);

    const int threads = std::max(1, opts.threads);
    const std::uint64_t span = total;  // indices 1..total inclusive
    const int workers = static_cast<int>(std::min<std::uint64_t>(threads, span));

    std::vector<LocalBest<Word>> results(workers);
    if (workers == 1) {
        results[0] = exhaustive_range(rows, 1, total + 1, opts.progress, total);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            const std::uint64_t lo = 1 + span * t / workers;
            const std::uint64_t hi = 1 + span * (t + 1) / workers;
            pool.emplace_back([&, t, lo, hi] {
                results[t] = exhaustive_range(rows, lo, hi, t == 0 ? opts.progress : nullptr, span);
            });
        }
        for (auto& th : pool) th.join();
    }

    LocalBest<Word> best;
    for (const auto& r : results) best.merge(r);
    if (opts.progress) opts.progress->store(1.0, std::memory_order_relaxed);

    DistanceResult out;
    out.d = best.d;
    out.witness.assign(best.witness.begin(), best.witness.end());
    out.method = "exhaustive";
    out.enumerated = best.enumerated;
    return out;
}

// ---------------------------------------------------------------------------
// Information-set engine.
// ---------------------------------------------------------------------------

struct BzSet {
    GenMatrix gamma;
    std::uint32_t penalty;  // k minus the number of pivots inside the fresh region
};

std::vector<BzSet> build_information_sets(const GenMatrix& m, std::size_t k) {
    const std::size_t n = m.cols();
    std::vector<bool> used(n, false);
    std::size_t used_count = 0;
    std::vector<BzSet> sets;

    while (used_count < n) {
        std::vector<std::size_t> order;
        order.reserve(n);
        for (std::size_t c = 0; c < n; ++c)
            if (!used[c]) order.push_back(c);
        for (std::size_t c = 0; c < n; ++c)
            if (used[c]) order.push_back(c);

        auto [gamma, pivots] = rref_with_column_order(m, order);
        std::size_t fresh = 0;
        for (std::size_t c : pivots)
            if (!used[c]) {
                used[c] = true;
                ++used_count;
                ++fresh;
            }
        if (fresh == 0) break;  // remaining columns carry no new rank (e.g. zero columns)
        sets.push_back({std::move(gamma), static_cast<std::uint32_t>(k - fresh)});
    }
    return sets;
}

// Lexicographic combinations of `w` positions out of `k`, visited from a given
// rank so the space splits cleanly across workers and restarts.
void unrank_combination(std::uint64_t rank, std::size_t k, std::size_t w,
                        std::vector<std::size_t>& comb) {
    comb.resize(w);
    std::size_t next = 0;
    for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t c = next;; ++c) {
            const std::uint64_t block = binom_sat(k - 1 - c, w - 1 - i);
            if (rank < block) {
                comb[i] = c;
                next = c + 1;
                break;
            }
            rank -= block;
        }
    }
}

/// Advances to the next combination; returns the first changed index, or -1 at the end.
int next_combination(std::vector<std::size_t>& comb, std::size_t k) {
    const std::size_t w = comb.size();
    int i = static_cast<int>(w) - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == k - w + static_cast<std::size_t>(i)) --i;
    if (i < 0) return -1;
    ++comb[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
    return i;
}

// Enumerates the weight-w messages whose support is one of the combinations
// with rank in [rank_begin, rank_end). Only scalar-class representatives are
// visited (first nonzero value pinned to 1): weights are scalar-invariant, so
// both the upper bound and the coverage guarantee are unaffected.
template <class Word>
LocalBest<Word> bz_enumerate_chunk(const ScaledRows<Word>& rows, std::size_t w,
                                   std::uint64_t rank_begin, std::uint64_t rank_end) {
    const std::size_t n = rows.n;
    const std::size_t k = rows.k;
    const std::uint32_t q = rows.p;
    LocalBest<Word> best;

    std::vector<std::size_t> comb;
    unrank_combination(rank_begin, k, w, comb);
    std::vector<std::uint32_t> val(w, 1);
    // pacc[t] = sum over s <= t of val[s] * row_{comb[s]}
    std::vector<std::vector<Word>> pacc(w, std::vector<Word>(n, 0));

    auto rebuild_from = [&](std::size_t t0) -> std::uint32_t {
        std::uint32_t wt = 0;
        for (std::size_t t = t0; t < w; ++t) {
            const Word* prev = t == 0 ? nullptr : pacc[t - 1].data();
            const Word* r = rows.row(comb[t], val[t]);
            if (t + 1 < w) {
                if (prev)
                    rows.add(pacc[t].data(), prev, r);
                else
                    std::memcpy(pacc[t].data(), r, n * sizeof(Word));
            } else {
                if (prev)
                    wt = rows.add_count(pacc[t].data(), prev, r);
                else {
                    std::memcpy(pacc[t].data(), r, n * sizeof(Word));
                    wt = rows.count(pacc[t].data());
                }
            }
        }
        return wt;
    };

    for (std::uint64_t rank = rank_begin; rank < rank_end; ++rank) {
        std::fill(val.begin(), val.end(), 1u);
        std::uint32_t wt = rebuild_from(rank == rank_begin ? 0 : 0);
        for (;;) {
            best.offer(wt, pacc[w - 1].data(), n);
            ++best.enumerated;
            // advance the value odometer (position 0 stays pinned at 1)
            std::size_t t = w;
            while (t-- > 1) {
                if (val[t] < q - 1) {
                    ++val[t];
                    break;
                }
                val[t] = 1;
            }
            if (t == 0 || w == 1) break;
            wt = rebuild_from(t);
        }
        if (rank + 1 < rank_end) {
            const int changed = next_combination(comb, k);
            if (changed < 0) break;  // defensive; rank arithmetic should prevent this
        }
    }
    return best;
}

template <class Word>
DistanceResult run_bz(const GenMatrix& m, std::size_t k, const DistanceOptions& opts) {
    std::vector<BzSet> sets = build_information_sets(m, k);
    std::vector<ScaledRows<Word>> tables(sets.size());
    for (std::size_t j = 0; j < sets.size(); ++j) tables[j].init(sets[j].gamma);

    const int threads = std::max(1, opts.threads);
    LocalBest<Word> best;

    for (std::size_t w = 1; w <= k; ++w) {
        const std::uint64_t total = binom_sat(k, w);
        for (std::size_t j = 0; j < sets.size(); ++j) {
            const int workers =
                total >= kCountCap ? 1 : static_cast<int>(std::min<std::uint64_t>(threads, total));
            std::vector<LocalBest<Word>> results(workers);
            if (workers == 1) {
                results[0] = bz_enumerate_chunk(tables[j], w, 0, total);
            } else {
                std::vector<std::thread> pool;
                for (int t = 0; t < workers; ++t) {
                    const std::uint64_t lo = total * t / workers;
                    const std::uint64_t hi = total * (t + 1) / workers;
                    pool.emplace_back(
                        [&, t, lo, hi] { results[t] = bz_enumerate_chunk(tables[j], w, lo, hi); });
                }
                for (auto& th : pool) th.join();
            }
            for (const auto& r : results) best.merge(r);
        }

        std::uint64_t lower = 0;
        for (const auto& s : sets) {
            const std::int64_t c = static_cast<std::int64_t>(w) + 1 - s.penalty;
            if (c > 0) lower += static_cast<std::uint64_t>(c);
        }
        if (opts.progress && best.d != UINT32_MAX)
            opts.progress->store(
                std::min(1.0, static_cast<double>(lower) / static_cast<double>(best.d)),
                std::memory_order_relaxed);
        if (best.d != UINT32_MAX && lower >= best.d) break;
    }

    if (opts.progress) opts.progress->store(1.0, std::memory_order_relaxed);
    DistanceResult out;
    out.d = best.d;
    out.witness.assign(best.witness.begin(), best.witness.end());
    out.method = "bz";
    out.enumerated = best.enumerated;
    return out;
}

std::size_t checked_rank(const GenMatrix& m) {
    const std::size_t rank = rref_rank(m).second;
    if (rank != m.rows())
        raise(errc::rank_deficient, "generator matrix has rank " + std::to_string(rank) +
                                        " < " + std::to_string(m.rows()) + " rows");
    return rank;
}

}  // namespace

std::uint64_t nonzero_message_count(std::uint32_t q, std::uint32_t k) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (total > kCountCap / q) return kCountCap;
        total *= q;
    }
    return total - 1;
}

DistanceResult min_distance_exhaustive(const GenMatrix& m, std::uint64_t budget,
                                       const DistanceOptions& opts) {
    checked_rank(m);
    const std::uint64_t total = nonzero_message_count(m.field().p(), static_cast<std::uint32_t>(m.rows()));
    if (total > budget)
        raise(errc::budget_exceeded, "q^k - 1 = " + std::to_string(total) +
                                         " exceeds the enumeration budget " + std::to_string(budget));
    if (m.field().p() <= 0xFF) return run_exhaustive<std::uint8_t>(m, total, opts);
    return run_exhaustive<std::uint16_t>(m, total, opts);
}

DistanceResult min_distance_bz(const GenMatrix& m, const DistanceOptions& opts) {
    const std::size_t k = checked_rank(m);
    if (m.field().p() <= 0xFF) return run_bz<std::uint8_t>(m, k, opts);
    return run_bz<std::uint16_t>(m, k, opts);
}

DistanceResult min_distance(const GenMatrix& m, const DistanceOptions& opts) {
    const std::uint64_t total = nonzero_message_count(m.field().p(), static_cast<std::uint32_t>(m.rows()));
    if (total <= kExhaustiveDispatchLimit) return min_distance_exhaustive(m, total, opts);
    return min_distance_bz(m, opts);
}

}  // namespace mtcodes
