#include "mtcodes/constructions.hpp"

#include <algorithm>

namespace mtcodes {

namespace {

std::uint32_t constituent_distance(const ConstacyclicCode& c, const BuildOptions& opts,
                                   std::size_t index) {
    if (opts.constituent_distances) {
        if (index >= opts.constituent_distances->size())
            raise(errc::length_mismatch, "constituent distance cache too short");
        return (*opts.constituent_distances)[index];
    }
    return min_distance(c.genmatrix(), opts.dist).d;
}

void check_coprime(const Poly& a, const Poly& b, const char* what) {
    if (poly_gcd(a, b).degree() != 0)
        raise(errc::hypothesis_violation, std::string(what) + " must be coprime");
}

// gcd of the block binomials, which must factor exactly as split.g * split.h.
Poly checked_gcd_split(const Binomial& b1, const Binomial& b2, const GcdSplit& split) {
    const Poly gcd = binomial_gcd(b1, b2);
    if (gcd.degree() < 1)
        raise(errc::hypothesis_violation, "block binomials are coprime; no shared divisor to split");
    if (!(split.g * split.h == gcd))
        raise(errc::hypothesis_violation, "split does not multiply back to the binomial gcd");
    return gcd;
}

void check_realized(const ConstructionReport& report) {
    if (report.code.params().n != report.predicted_n || report.code.params().k != report.predicted_k)
        raise(errc::structure_violation, "realized parameters disagree with the construction");
}

}  // namespace

const char* bound_kind_name(BoundKind kind) noexcept {
    switch (kind) {
        case BoundKind::exact_min: return "EXACT_MIN";
        case BoundKind::upper_2: return "UPPER_2";
        case BoundKind::lower_sum: return "LOWER_SUM";
        case BoundKind::lower_sum_ell: return "LOWER_SUM_ELL";
        case BoundKind::lower_d2_plus_1: return "LOWER_D2_PLUS_1";
        case BoundKind::lower_qt: return "LOWER_QT";
    }
    return "UNKNOWN";
}

ConstructionReport build_coprime_concat(const Binomial& b1, const Poly& g1, const Binomial& b2,
                                        const Poly& g2, const BuildOptions& opts) {
    const Poly gcd = binomial_gcd(b1, b2);
    if (gcd.degree() != 0)
        raise(errc::gcd_not_one, "block binomials share the divisor " + coeff_array_string(gcd));

    ConstacyclicCode c1 = ConstacyclicCode::make(b1.n(), b1.a(), g1);
    ConstacyclicCode c2 = ConstacyclicCode::make(b2.n(), b2.a(), g2);
    const std::uint32_t d1 = constituent_distance(c1, opts, 0);
    const std::uint32_t d2 = constituent_distance(c2, opts, 1);

    MTGenerator gen({MTBlock(b1.n(), b1.a()), MTBlock(b2.n(), b2.a())}, {g1, g2});
    ConstructionReport report{make_mt_code(gen),
                              b1.n() + b2.n(),
                              c1.dim() + c2.dim(),
                              BoundKind::exact_min,
                              std::min(d1, d2),
                              {CodeParams{b1.n(), c1.dim(), b1.field().p(), d1},
                               CodeParams{b2.n(), c2.dim(), b2.field().p(), d2}},
                              {},
                              std::nullopt};
    check_realized(report);
    return report;
}

ConstructionReport check_degenerate(const Binomial& b1, const Binomial& b2, const GcdSplit& split,
                                    const Poly& p1, const Poly& p2, const BuildOptions& opts) {
    (void)opts;
    if (b1.n() == b2.n())
        raise(errc::hypothesis_violation, "block lengths must differ");
    const Poly gcd = checked_gcd_split(b1, b2, split);

    const Poly h1 = poly_divmod(b1.to_poly(), gcd).first;
    const Poly h2 = poly_divmod(b2.to_poly(), gcd).first;
    check_coprime(split.h * h1, p1, "h*h1 and p1");
    check_coprime(split.h * h2, p2, "h*h2 and p2");

    MTGenerator gen({MTBlock(b1.n(), b1.a()), MTBlock(b2.n(), b2.a())},
                    {split.g * p1, split.g * p2});
    MTCode code = make_mt_code(gen);

    // Proof-shaped weight-2 codeword: with n1 > n2, the message
    // f = h * h2 * (p1^{-1} mod h1) realizes (x^{n2} - a2, 0).
    const bool first_longer = b1.n() > b2.n();
    const Poly& h_long = first_longer ? h1 : h2;
    const Poly& h_short = first_longer ? h2 : h1;
    const Poly& p_long = first_longer ? p1 : p2;
    const Poly t = poly_ext_gcd(p_long, h_long).u;  // p_long * t = 1 (mod h_long)
    const Poly f = split.h * h_short * t;
    std::vector<std::uint16_t> witness;
    for (std::size_t i = 0; i < gen.block_count(); ++i) {
        const Poly comp = reduce_mod_binomial(f * gen.polys()[i], gen.blocks()[i].m,
                                              gen.blocks()[i].a.value());
        std::vector<std::uint16_t> seg(gen.blocks()[i].m, 0);
        for (std::size_t j = 0; j < comp.coeffs().size(); ++j) seg[j] = comp.coeffs()[j];
        witness.insert(witness.end(), seg.begin(), seg.end());
    }
    std::uint32_t wt = 0;
    for (auto v : witness) wt += (v != 0);
    if (wt != 2)
        raise(errc::structure_violation,
              "derived witness has weight " + std::to_string(wt) + ", expected 2");

    const std::uint32_t predicted_k = static_cast<std::uint32_t>(
        split.h.degree() + h1.degree() + h2.degree());
    ConstructionReport report{std::move(code),
                              b1.n() + b2.n(),
                              predicted_k,
                              BoundKind::upper_2,
                              2,
                              {},
                              std::move(witness),
                              std::nullopt};
    check_realized(report);
    return report;
}

ConstructionReport build_shared_factor(const Binomial& b1, const Binomial& b2,
                                       const GcdSplit& split, const Poly& p1, const Poly& p2,
                                       const BuildOptions& opts) {
    const Poly gcd = checked_gcd_split(b1, b2, split);
    check_coprime(p1, split.g, "p1 and g");
    check_coprime(p2, split.g, "p2 and g");

    const Poly h1 = poly_divmod(b1.to_poly(), gcd).first;
    const Poly h2 = poly_divmod(b2.to_poly(), gcd).first;

    ConstacyclicCode c1 = ConstacyclicCode::make(b1.n(), b1.a(), split.h * h1);
    ConstacyclicCode c2 = ConstacyclicCode::make(b2.n(), b2.a(), split.h * h2);
    const std::uint32_t d1 = constituent_distance(c1, opts, 0);
    const std::uint32_t d2 = constituent_distance(c2, opts, 1);

    MTGenerator gen({MTBlock(b1.n(), b1.a()), MTBlock(b2.n(), b2.a())},
                    {p1 * split.h * h1, p2 * split.h * h2});
    const std::uint32_t predicted_k =
        static_cast<std::uint32_t>(gcd.degree() - split.h.degree());
    ConstructionReport report{make_mt_code(gen),
                              b1.n() + b2.n(),
                              predicted_k,
                              BoundKind::lower_sum,
                              d1 + d2,
                              {CodeParams{b1.n(), c1.dim(), b1.field().p(), d1},
                               CodeParams{b2.n(), c2.dim(), b2.field().p(), d2}},
                              {},
                              std::nullopt};
    check_realized(report);
    return report;
}

ConstructionReport build_subcode_sum(const std::vector<SubcodeSumPart>& parts, std::uint32_t k,
                                     const BuildOptions& opts) {
    if (parts.empty()) raise(errc::hypothesis_violation, "need at least one block");

    std::vector<MTBlock> blocks;
    std::vector<Poly> polys;
    std::vector<CodeParams> constituents;
    std::uint32_t bound = 0;
    std::uint32_t n = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& part = parts[i];
        ConstacyclicCode c = ConstacyclicCode::make(part.b.n(), part.b.a(), part.g);
        if (c.dim() != k)
            raise(errc::unequal_dimensions, "block " + std::to_string(i) + " has dimension " +
                                                std::to_string(c.dim()) + ", expected " +
                                                std::to_string(k));
        check_coprime(part.p, c.check_poly(), "p_i and h_i");
        const std::uint32_t di = constituent_distance(c, opts, i);
        constituents.push_back(CodeParams{part.b.n(), k, part.b.field().p(), di});
        bound += di;
        n += part.b.n();
        blocks.emplace_back(part.b.n(), part.b.a());
        polys.push_back(part.p * part.g);
    }

    MTGenerator gen(std::move(blocks), std::move(polys));
    ConstructionReport report{mt_subcode(gen, k),
                              n,
                              k,
                              parts.size() > 2 ? BoundKind::lower_sum_ell : BoundKind::lower_sum,
                              bound,
                              std::move(constituents),
                              {},
                              std::nullopt};
    check_realized(report);
    return report;
}

ConstructionReport build_corollary(const Binomial& b1, const Poly& p1, const Binomial& b2,
                                   const GcdSplit& split, const Poly& p2,
                                   const BuildOptions& opts) {
    if (b1.n() >= b2.n()) raise(errc::hypothesis_violation, "need n1 < n2");
    if (!(split.g * split.h == b2.to_poly()))
        raise(errc::hypothesis_violation, "split does not multiply back to x^n2 - a2");
    if (split.h.degree() != static_cast<int>(b1.n()))
        raise(errc::hypothesis_violation, "deg(h) must equal n1");
    check_coprime(p1, b1.to_poly(), "p1 and x^n1 - a1");
    check_coprime(p2, split.h, "p2 and h");

    // <p1> is the whole first block; <g*p2> = <g> carries the distance d2.
    ConstacyclicCode c1 = ConstacyclicCode::make(b1.n(), b1.a(), Poly::one(b1.field()));
    ConstacyclicCode c2 = ConstacyclicCode::make(b2.n(), b2.a(), split.g);
    const std::uint32_t d1 = constituent_distance(c1, opts, 0);
    const std::uint32_t d2 = constituent_distance(c2, opts, 1);

    MTGenerator gen({MTBlock(b1.n(), b1.a()), MTBlock(b2.n(), b2.a())}, {p1, split.g * p2});
    ConstructionReport report{mt_subcode(gen, b1.n()),
                              b1.n() + b2.n(),
                              b1.n(),
                              BoundKind::lower_d2_plus_1,
                              d2 + 1,
                              {CodeParams{b1.n(), b1.n(), b1.field().p(), d1},
                               CodeParams{b2.n(), c2.dim(), b2.field().p(), d2}},
                              {},
                              std::nullopt};
    check_realized(report);
    return report;
}

ConstructionReport qt_bound(std::uint32_t m, const FieldElement& a, const Poly& g,
                            const std::vector<Poly>& fs, const BuildOptions& opts) {
    if (fs.empty()) raise(errc::hypothesis_violation, "need at least one block multiplier");
    ConstacyclicCode cg = ConstacyclicCode::make(m, a, g);
    for (std::size_t i = 0; i < fs.size(); ++i) check_coprime(fs[i], cg.check_poly(), "f_i and h");
    const std::uint32_t dg = constituent_distance(cg, opts, 0);

    std::vector<MTBlock> blocks;
    std::vector<Poly> polys;
    for (const Poly& f : fs) {
        blocks.emplace_back(m, a);
        polys.push_back(f * g);
    }
    MTGenerator gen(std::move(blocks), std::move(polys));
    const auto ell = static_cast<std::uint32_t>(fs.size());
    ConstructionReport report{make_mt_code(gen),
                              m * ell,
                              cg.dim(),
                              BoundKind::lower_qt,
                              ell * dg,
                              {CodeParams{m, cg.dim(), a.field().p(), dg}},
                              {},
                              std::nullopt};
    check_realized(report);
    return report;
}

const char* construction_name(const ConstructionSpec& spec) noexcept {
    switch (spec.index()) {
        case 0: return "coprime_concat";
        case 1: return "degenerate";
        case 2: return "shared_factor";
        case 3: return "subcode_sum";
        case 4: return "corollary";
        case 5: return "qt";
    }
    return "unknown";
}

ConstructionReport build(const ConstructionSpec& spec, const BuildOptions& opts) {
    return std::visit(
        [&](const auto& s) -> ConstructionReport {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CoprimeConcatSpec>)
                return build_coprime_concat(s.b1, s.g1, s.b2, s.g2, opts);
            else if constexpr (std::is_same_v<T, DegenerateSpec>)
                return check_degenerate(s.b1, s.b2, s.split, s.p1, s.p2, opts);
            else if constexpr (std::is_same_v<T, SharedFactorSpec>)
                return build_shared_factor(s.b1, s.b2, s.split, s.p1, s.p2, opts);
            else if constexpr (std::is_same_v<T, SubcodeSumSpec>)
                return build_subcode_sum(s.parts, s.k, opts);
            else if constexpr (std::is_same_v<T, CorollarySpec>)
                return build_corollary(s.b1, s.p1, s.b2, s.split, s.p2, opts);
            else
                return qt_bound(s.m, s.a, s.g, s.fs, opts);
        },
        spec);
}

std::vector<MultiplierSlot> multiplier_slots(const ConstructionSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::vector<MultiplierSlot> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CoprimeConcatSpec>) {
                return {};
            } else if constexpr (std::is_same_v<T, DegenerateSpec>) {
                const Poly gcd = checked_gcd_split(s.b1, s.b2, s.split);
                const Poly h1 = poly_divmod(s.b1.to_poly(), gcd).first;
                const Poly h2 = poly_divmod(s.b2.to_poly(), gcd).first;
                return {{s.split.h * h1, s.b1.n()}, {s.split.h * h2, s.b2.n()}};
            } else if constexpr (std::is_same_v<T, SharedFactorSpec>) {
                checked_gcd_split(s.b1, s.b2, s.split);
                return {{s.split.g, s.b1.n()}, {s.split.g, s.b2.n()}};
            } else if constexpr (std::is_same_v<T, SubcodeSumSpec>) {
                std::vector<MultiplierSlot> slots;
                for (const auto& part : s.parts) {
                    ConstacyclicCode c = ConstacyclicCode::make(part.b.n(), part.b.a(), part.g);
                    slots.push_back({c.check_poly(), part.b.n()});
                }
                return slots;
            } else if constexpr (std::is_same_v<T, CorollarySpec>) {
                if (!(s.split.g * s.split.h == s.b2.to_poly()))
                    raise(errc::hypothesis_violation, "split does not multiply back to x^n2 - a2");
                return {{s.b1.to_poly(), s.b1.n()}, {s.split.h, s.b2.n()}};
            } else {
                ConstacyclicCode cg = ConstacyclicCode::make(s.m, s.a, s.g);
                std::vector<MultiplierSlot> slots(s.fs.size(), {cg.check_poly(), s.m});
                return slots;
            }
        },
        spec);
}

ConstructionSpec with_multipliers(ConstructionSpec spec, const std::vector<Poly>& multipliers) {
    std::visit(
        [&](auto& s) {
            using T = std::decay_t<decltype(s)>;
            auto expect = [&](std::size_t count) {
                if (multipliers.size() != count)
                    raise(errc::length_mismatch, "expected " + std::to_string(count) +
                                                     " multipliers, got " +
                                                     std::to_string(multipliers.size()));
            };
            if constexpr (std::is_same_v<T, CoprimeConcatSpec>) {
                expect(0);
            } else if constexpr (std::is_same_v<T, DegenerateSpec> ||
                                 std::is_same_v<T, SharedFactorSpec>) {
                expect(2);
                s.p1 = multipliers[0];
                s.p2 = multipliers[1];
            } else if constexpr (std::is_same_v<T, SubcodeSumSpec>) {
                expect(s.parts.size());
                for (std::size_t i = 0; i < s.parts.size(); ++i) s.parts[i].p = multipliers[i];
            } else if constexpr (std::is_same_v<T, CorollarySpec>) {
                expect(2);
                s.p1 = multipliers[0];
                s.p2 = multipliers[1];
            } else {
                expect(s.fs.size());
                s.fs = multipliers;
            }
        },
        spec);
    return spec;
}

void compute_actual_distance(ConstructionReport& report, const DistanceOptions& opts) {
    const DistanceResult res = min_distance(report.code.matrix(), opts);
    report.actual_d = res.d;
    report.code.params().set_distance(res.d);
}

}  // namespace mtcodes
