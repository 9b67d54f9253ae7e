#pragma once

#include <string>
#include <vector>

#include "mtcodes/constructions.hpp"

namespace mtcodes {

// Bundled inputs for the reference example suite: the published gcd
// identities and example codes this library is expected to reproduce. Kept as
// plain data so tests can corrupt individual entries and watch a check fail.
struct ReferenceFixtures {
    struct GcdCase {
        std::uint32_t n1;
        std::int64_t a1;
        std::uint32_t n2;
        std::int64_t a2;
        std::vector<std::int64_t> expected;  // ascending coefficients
    };
    std::vector<GcdCase> gcd_cases;  // over GF(7)

    // shared-factor chain over GF(3): blocks (20, a=2) and (40, a=1)
    std::vector<std::int64_t> shared_g, shared_p1, shared_p2;

    // corollary subcode [23,7,13] over GF(7): blocks (7, a=1) and (16, a=1)
    std::vector<std::int64_t> cor_g, cor_p1, cor_p2;

    // subcode [54,4,44] over GF(7): blocks (4, a=2) and (50, a=3)
    std::vector<std::int64_t> opt_g2, opt_p2;

    // subcode [53,18,21] over GF(5): blocks (19, a=1) and (34, a=2)
    std::vector<std::int64_t> prime_g1, prime_g2, prime_p2;

    // subcode [33,12,12] over GF(3): blocks (13, a=1) and (20, a=2)
    std::vector<std::int64_t> tern_g1, tern_g2, tern_p2;

    static ReferenceFixtures standard();
};

enum class CheckStatus { pass, fail, skipped };

struct VerifyCheck {
    std::string name;
    std::string expected;
    std::string computed;
    CheckStatus status;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool overall = false;  // true iff no check failed
};

/// Runs the bundled reference checks. skip_slow marks the [53,18,21] GF(5)
/// computation SKIPPED instead of running its information-set enumeration.
VerifyReport run_reference_checks(bool skip_slow, const DistanceOptions& dist = {},
                                  const ReferenceFixtures& fixtures = ReferenceFixtures::standard());

}  // namespace mtcodes
