#include "mtcodes/search.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace mtcodes {

void BestKnownTable::add(std::uint32_t q, std::uint32_t n, std::uint32_t k, std::uint32_t d) {
    if (d < 1) raise(errc::out_of_range, "table distances must be >= 1");
    entries_[{q, n, k}] = d;
}

std::optional<std::uint32_t> BestKnownTable::lookup(std::uint32_t q, std::uint32_t n,
                                                    std::uint32_t k) const {
    const auto it = entries_.find({q, n, k});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

BestKnownTable BestKnownTable::from_csv(std::istream& in) {
    BestKnownTable table;
    std::string line;
    if (!std::getline(in, line)) raise(errc::parse_error, "empty table CSV");
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line != "q,n,k,d") raise(errc::parse_error, "table CSV header must be q,n,k,d");
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        std::uint32_t vals[4];
        std::stringstream row(line);
        std::string cell;
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(row, cell, ',')) raise(errc::parse_error, "short table row: " + line);
            vals[i] = static_cast<std::uint32_t>(std::stoul(cell));
        }
        table.add(vals[0], vals[1], vals[2], vals[3]);
    }
    return table;
}

BestKnownTable BestKnownTable::bundled() {
    BestKnownTable table;
    table.add(3, 60, 6, 36);
    table.add(7, 23, 7, 13);
    table.add(7, 54, 4, 44);
    table.add(5, 53, 18, 21);
    table.add(3, 33, 12, 12);
    return table;
}

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::beats: return "BEATS";
        case Verdict::matches: return "MATCHES";
        case Verdict::below: return "BELOW";
        case Verdict::absent: return "ABSENT";
        case Verdict::skipped: return "SKIPPED";
    }
    return "UNKNOWN";
}

Poly sample_poly(const PrimeField& field, std::uint32_t max_deg, SplitMix64& rng) {
    std::vector<std::uint16_t> c(max_deg + 1);
    for (auto& v : c) v = static_cast<std::uint16_t>(rng.below(field.p()));
    return Poly::from_residues(field, std::move(c));
}

Poly sample_coprime_poly(const Poly& h, std::uint32_t max_deg, SplitMix64& rng) {
    const PrimeField& field = h.field();
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Poly p = sample_poly(field, max_deg, rng);
        if (p.is_zero()) continue;
        if (h.degree() < 1 || poly_gcd(p, h).degree() == 0) return p;
    }
    raise(errc::exhausted_rejections, "no coprime polynomial found in 10000 draws");
}

namespace {

std::vector<Poly> candidate_multipliers(const SearchConfig& config,
                                        const std::vector<MultiplierSlot>& slots,
                                        std::uint64_t index) {
    if (index == 0 && config.inject) {
        if (config.inject->size() != slots.size())
            raise(errc::length_mismatch, "injected multiplier count does not match template slots");
        return *config.inject;
    }
    SplitMix64 rng = SplitMix64::stream(config.seed, index);
    std::vector<Poly> ms;
    ms.reserve(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s)
        ms.push_back(sample_coprime_poly(slots[s].coprime_target, config.max_degrees[s], rng));
    return ms;
}

}  // namespace

std::vector<SearchResult> run_search(const SearchConfig& config, const BestKnownTable& table,
                                     int threads) {
    if (config.num_candidates < 1 || config.keep_top < 1)
        raise(errc::out_of_range, "num_candidates and keep_top must be >= 1");

    const std::vector<MultiplierSlot> slots = multiplier_slots(config.construction);
    if (config.max_degrees.size() != slots.size())
        raise(errc::length_mismatch, "max_degrees must list one bound per multiplier slot");
    for (std::size_t s = 0; s < slots.size(); ++s)
        if (config.max_degrees[s] >= slots[s].block_length)
            raise(errc::out_of_range, "multiplier degree bound must stay below the block length");

    // Validate the fixed inputs once and capture the constituent distances;
    // they do not depend on the sampled multipliers.
    std::vector<Poly> ones;
    for (std::size_t s = 0; s < slots.size(); ++s)
        ones.push_back(Poly::one(slots[s].coprime_target.field()));
    const ConstructionReport probe = build(with_multipliers(config.construction, ones));
    std::vector<std::uint32_t> cached;
    for (const auto& c : probe.constituents) cached.push_back(*c.d);

    std::vector<SearchResult> results(config.num_candidates);
    auto evaluate = [&](std::uint64_t index) {
        SearchResult r;
        r.candidate_index = index;
        r.multipliers = candidate_multipliers(config, slots, index);

        BuildOptions opts;
        opts.constituent_distances = &cached;
        ConstructionReport report = build(with_multipliers(config.construction, r.multipliers), opts);
        r.bound = report.bound_value;
        r.params = report.code.params();

        const std::uint64_t count = nonzero_message_count(r.params.q, r.params.k);
        if (count <= config.distance_budget) {
            compute_actual_distance(report);
            r.params = report.code.params();
            const auto best = table.lookup(r.params.q, r.params.n, r.params.k);
            if (!best)
                r.verdict = Verdict::absent;
            else if (*r.params.d > *best)
                r.verdict = Verdict::beats;
            else if (*r.params.d == *best)
                r.verdict = Verdict::matches;
            else
                r.verdict = Verdict::below;
        } else {
            r.verdict = Verdict::skipped;
        }
        results[index] = std::move(r);
    };

    const int workers =
        std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(
                                               config.num_candidates, 1024))));
    if (workers == 1) {
        for (std::uint64_t i = 0; i < config.num_candidates; ++i) evaluate(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::uint64_t i = static_cast<std::uint64_t>(t);
                         i < config.num_candidates; i += static_cast<std::uint64_t>(workers))
                        evaluate(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    std::sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
        const std::int64_t da = a.params.d ? static_cast<std::int64_t>(*a.params.d) : -1;
        const std::int64_t db = b.params.d ? static_cast<std::int64_t>(*b.params.d) : -1;
        if (da != db) return da > db;
        if (a.params.k != b.params.k) return a.params.k > b.params.k;
        return a.candidate_index < b.candidate_index;
    });
    if (results.size() > config.keep_top) results.resize(config.keep_top);
    return results;
}

void write_results_csv(std::ostream& out, const std::vector<SearchResult>& results) {
    out << "rank,candidate,q,n,k,d,bound,verdict,multipliers\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const SearchResult& r = results[i];
        out << (i + 1) << ',' << r.candidate_index << ',' << r.params.q << ',' << r.params.n << ','
            << r.params.k << ',';
        if (r.params.d) out << *r.params.d;
        out << ',' << r.bound << ',' << verdict_name(r.verdict) << ',';
        for (std::size_t m = 0; m < r.multipliers.size(); ++m) {
            if (m) out << ';';
            out << coeff_array_string(r.multipliers[m]);
        }
        out << '\n';
    }
}

}  // namespace mtcodes
