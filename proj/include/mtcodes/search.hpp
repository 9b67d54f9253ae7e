#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "mtcodes/constructions.hpp"
#include "mtcodes/rng.hpp"

namespace mtcodes {

// Reference table of the best distances known for (q, n, k). Lookups on
// absent keys report that absence; no defaults.
class BestKnownTable {
  public:
    void add(std::uint32_t q, std::uint32_t n, std::uint32_t k, std::uint32_t d);
    std::optional<std::uint32_t> lookup(std::uint32_t q, std::uint32_t n, std::uint32_t k) const;
    std::size_t size() const noexcept { return entries_.size(); }

    /// Parses CSV with header "q,n,k,d".
    static BestKnownTable from_csv(std::istream& in);
    /// The built-in reference entries shipped with the library.
    static BestKnownTable bundled();

  private:
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::uint32_t> entries_;
};

struct SearchConfig {
    ConstructionSpec construction;           // multiplier positions are sampled
    std::vector<std::uint32_t> max_degrees;  // per-slot degree cap, < block length
    std::uint64_t num_candidates = 1;
    std::uint64_t seed = 0;
    std::uint64_t distance_budget = kExhaustiveDispatchLimit;
    std::uint64_t keep_top = 10;
    std::optional<std::vector<Poly>> inject;  // fixed multipliers for candidate 0
};

enum class Verdict { beats, matches, below, absent, skipped };

const char* verdict_name(Verdict v) noexcept;

struct SearchResult {
    std::uint64_t candidate_index = 0;
    std::vector<Poly> multipliers;
    CodeParams params;  // d empty when the candidate was skipped
    std::uint32_t bound = 0;
    Verdict verdict = Verdict::absent;
};

/// Uniform nonzero polynomial of degree <= max_deg coprime to h, by rejection
/// sampling from the caller's stream. Throws ExhaustedRejections after 10000
/// consecutive misses.
Poly sample_coprime_poly(const Poly& h, std::uint32_t max_deg, SplitMix64& rng);

/// Uniform polynomial (possibly zero) of degree <= max_deg.
Poly sample_poly(const PrimeField& field, std::uint32_t max_deg, SplitMix64& rng);

/// Evaluates num_candidates candidates, each with multipliers drawn from the
/// per-candidate stream (seed, index), and returns the keep_top best ranked by
/// (d desc, k desc, index asc). Output is a pure function of (config, table),
/// independent of the worker count.
std::vector<SearchResult> run_search(const SearchConfig& config, const BestKnownTable& table,
                                     int threads = 1);

/// Results CSV: header "rank,candidate,q,n,k,d,bound,verdict,multipliers".
void write_results_csv(std::ostream& out, const std::vector<SearchResult>& results);

}  // namespace mtcodes
