#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "mtcodes/matrix.hpp"

namespace mtcodes {

struct DistanceOptions {
    int threads = 1;                          // results are identical for any worker count
    std::atomic<double>* progress = nullptr;  // optional polling hook, reaches 1.0 on completion
};

struct DistanceResult {
    std::uint32_t d = 0;
    std::vector<std::uint16_t> witness;  // one codeword of weight exactly d
    const char* method = "";
    std::uint64_t enumerated = 0;  // messages evaluated
};

/// q^k - 1 saturated at 2^62; the number of nonzero messages of a [n, k] code.
std::uint64_t nonzero_message_count(std::uint32_t q, std::uint32_t k);

/// Exact minimum weight over all q^k - 1 nonzero messages. Requires full rank
/// and q^k - 1 <= budget.
DistanceResult min_distance_exhaustive(const GenMatrix& m, std::uint64_t budget,
                                       const DistanceOptions& opts = {});

/// Exact minimum distance by information-set enumeration: greedily builds
/// disjoint information sets, enumerates messages by ascending weight per set,
/// and stops once the accumulated lower bound meets the best weight seen.
DistanceResult min_distance_bz(const GenMatrix& m, const DistanceOptions& opts = {});

/// Dispatches to the exhaustive engine when q^k - 1 <= 2^22, else to the
/// information-set engine. The distance is identical either way.
DistanceResult min_distance(const GenMatrix& m, const DistanceOptions& opts = {});

inline constexpr std::uint64_t kExhaustiveDispatchLimit = std::uint64_t(1) << 22;

}  // namespace mtcodes
