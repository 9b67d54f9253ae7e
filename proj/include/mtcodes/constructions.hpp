#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mtcodes/constacyclic.hpp"
#include "mtcodes/distance.hpp"
#include "mtcodes/factorize.hpp"
#include "mtcodes/mtcode.hpp"

namespace mtcodes {

// How a construction's bound_value relates to the true minimum distance.
enum class BoundKind {
    exact_min,        // d = bound
    upper_2,          // d <= 2
    lower_sum,        // d >= d1 + d2
    lower_sum_ell,    // d >= sum of the l constituent distances
    lower_d2_plus_1,  // d >= d2 + 1
    lower_qt,         // d >= l * d(C_g)
};

const char* bound_kind_name(BoundKind kind) noexcept;

struct ConstructionReport {
    MTCode code;
    std::uint32_t predicted_n = 0;
    std::uint32_t predicted_k = 0;
    BoundKind bound_kind = BoundKind::exact_min;
    std::uint32_t bound_value = 0;
    std::vector<CodeParams> constituents;        // with distances filled in
    std::vector<std::uint16_t> weight2_witness;  // degenerate construction only
    std::optional<std::uint32_t> actual_d;
};

struct BuildOptions {
    DistanceOptions dist;
    // When set, constituent distances are taken from here instead of being
    // recomputed (they depend only on a template's fixed inputs).
    const std::vector<std::uint32_t>* constituent_distances = nullptr;
};

/// Concatenation along coprime binomials: gcd(x^n1 - a1, x^n2 - a2) = 1 and
/// g_i | x^{n_i} - a_i give the full code on (g1, g2) with parameters
/// (n1 + n2, k1 + k2, min(d1, d2)) exactly.
ConstructionReport build_coprime_concat(const Binomial& b1, const Poly& g1, const Binomial& b2,
                                        const Poly& g2, const BuildOptions& opts = {});

// A (g, h) factorization of a binomial, supplied by the caller.
struct GcdSplit {
    Poly g, h;
};

/// The degenerate family: when the block binomials share the divisor
/// g*h = gcd and the generator is (g*p1, g*p2) with gcd(h*h_i, p_i) = 1, the
/// code has dimension k + k1 + k2 but distance at most 2. The report carries
/// an explicit weight-2 codeword.
ConstructionReport check_degenerate(const Binomial& b1, const Binomial& b2, const GcdSplit& split,
                                    const Poly& p1, const Poly& p2, const BuildOptions& opts = {});

/// Shared-factor construction: generator (p1*h*h1, p2*h*h2) with
/// gcd(p_i, g) = 1 gives dimension m - deg(h) and distance >= d1 + d2, where
/// d_i is the distance of the constacyclic code <h*h_i> of length n_i.
ConstructionReport build_shared_factor(const Binomial& b1, const Binomial& b2,
                                       const GcdSplit& split, const Poly& p1, const Poly& p2,
                                       const BuildOptions& opts = {});

struct SubcodeSumPart {
    Binomial b;
    Poly g, p;
};

/// Fixed-dimension subcode: all constituents <g_i> must share dimension k and
/// gcd(p_i, h_i) = 1; the span of the first k shifts of (p_1*g_1,...,p_l*g_l)
/// is a [sum n_i, k, d] code with d >= sum d_i.
ConstructionReport build_subcode_sum(const std::vector<SubcodeSumPart>& parts, std::uint32_t k,
                                     const BuildOptions& opts = {});

/// Special case with a free first block: x^{n2} - a2 = g*h, deg(h) = n1,
/// gcd(p1, x^{n1} - a1) = 1, gcd(p2, h) = 1; the subcode on (p1, g*p2) has
/// parameters [n1 + n2, n1, d] with d >= d2 + 1.
ConstructionReport build_corollary(const Binomial& b1, const Poly& p1, const Binomial& b2,
                                   const GcdSplit& split, const Poly& p2,
                                   const BuildOptions& opts = {});

/// Quasi-twisted lower bound: l equal blocks (m, a), generator (f_1*g,...,f_l*g)
/// with x^m - a = g*h and gcd(f_i, h) = 1; dimension m - deg(g) and
/// d >= l * d(<g>).
ConstructionReport qt_bound(std::uint32_t m, const FieldElement& a, const Poly& g,
                            const std::vector<Poly>& fs, const BuildOptions& opts = {});

// ---------------------------------------------------------------------------
// Template form used by the JSON interface and the search driver.
// ---------------------------------------------------------------------------

struct CoprimeConcatSpec {
    Binomial b1;
    Poly g1;
    Binomial b2;
    Poly g2;
};
struct DegenerateSpec {
    Binomial b1, b2;
    GcdSplit split;
    Poly p1, p2;
};
struct SharedFactorSpec {
    Binomial b1, b2;
    GcdSplit split;
    Poly p1, p2;
};
struct SubcodeSumSpec {
    std::vector<SubcodeSumPart> parts;
    std::uint32_t k;
};
struct CorollarySpec {
    Binomial b1;
    Poly p1;
    Binomial b2;
    GcdSplit split;
    Poly p2;
};
struct QtSpec {
    std::uint32_t m;
    FieldElement a;
    Poly g;
    std::vector<Poly> fs;
};

using ConstructionSpec = std::variant<CoprimeConcatSpec, DegenerateSpec, SharedFactorSpec,
                                      SubcodeSumSpec, CorollarySpec, QtSpec>;

const char* construction_name(const ConstructionSpec& spec) noexcept;

ConstructionReport build(const ConstructionSpec& spec, const BuildOptions& opts = {});

// One free multiplier position of a template: polynomials sampled for it must
// be coprime to `coprime_target` and live in a block of the given length.
struct MultiplierSlot {
    Poly coprime_target;
    std::uint32_t block_length;
};

/// The template's free multiplier positions, in a fixed order. Validates the
/// fixed inputs (divisibility, gcd shape) as a side effect.
std::vector<MultiplierSlot> multiplier_slots(const ConstructionSpec& spec);

/// Copy of the template with its multiplier positions replaced.
ConstructionSpec with_multipliers(ConstructionSpec spec, const std::vector<Poly>& multipliers);

/// Runs the appropriate distance engine on the realized code and records the
/// result in the report.
void compute_actual_distance(ConstructionReport& report, const DistanceOptions& opts = {});

}  // namespace mtcodes
