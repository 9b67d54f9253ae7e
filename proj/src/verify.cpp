#include "mtcodes/verify.hpp"

#include <functional>

namespace mtcodes {

ReferenceFixtures ReferenceFixtures::standard() {
    ReferenceFixtures fx;
    fx.gcd_cases = {
        {10, 4, 15, 1, {5, 0, 0, 0, 0, 1}},  // x^5 - 2 over GF(7)
        {11, 5, 16, 4, {4, 1}},              // x - 3
        {12, 3, 15, 4, {1}},
    };
    fx.shared_g = {2, 2, 0, 0, 1, 1, 1};  // x^6 + x^5 + x^4 + 2x + 2
    fx.shared_p1 = {0, 2, 1, 1};
    fx.shared_p2 = {1, 2, 1, 1, 1, 1};

    fx.cor_g = {6, 2, 1, 3, 5, 1, 2, 1, 6, 1};
    fx.cor_p1 = {0, 0, 4, 2, 1, 2, 1};
    fx.cor_p2 = {1, 6, 1, 1, 6, 0, 2};

    fx.opt_g2 = {2, 3, 5, 4, 6, 4, 0, 2, 2, 5, 2, 6, 4, 6, 5, 1, 2, 1, 0, 6, 5, 5, 3, 0,
                 6, 1, 5, 2, 0, 6, 4, 3, 5, 2, 2, 1, 4, 1, 2, 3, 0, 3, 5, 5, 5, 1, 1};
    fx.opt_p2 = {5, 1, 2, 1};

    fx.prime_g1 = {4, 1};
    fx.prime_g2 = {1, 1, 2, 4, 4, 4, 0, 4, 0, 2, 0, 3, 4, 2, 3, 2, 1};
    fx.prime_p2 = {1, 0, 4, 4, 4, 4, 3, 3, 2, 4, 2, 4, 2, 3, 2, 3, 2, 3};

    fx.tern_g1 = {2, 1};
    fx.tern_g2 = {1, 1, 2, 2, 1, 2, 2, 1, 1};
    fx.tern_p2 = {0, 2, 1, 2, 2, 1, 1, 2, 1, 2, 1, 2};
    return fx;
}

namespace {

std::string params_string(std::uint32_t n, std::uint32_t k, std::uint32_t d) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

std::string params_with_bound(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                              std::uint32_t bound) {
    return params_string(n, k, d) + " bound " + std::to_string(bound);
}

struct Runner {
    VerifyReport report;
    DistanceOptions dist;

    void add(const std::string& name, const std::string& expected,
             const std::function<std::string()>& compute) {
        VerifyCheck check{name, expected, "", CheckStatus::fail};
        try {
            check.computed = compute();
            check.status = check.computed == expected ? CheckStatus::pass : CheckStatus::fail;
        } catch (const Error& e) {
            check.computed = std::string("error: ") + e.what();
        }
        report.checks.push_back(std::move(check));
    }

    void add_skipped(const std::string& name, const std::string& expected) {
        report.checks.push_back({name, expected, "skipped", CheckStatus::skipped});
    }

    std::string constacyclic_check(std::uint32_t n, const FieldElement& a, const Poly& g) {
        ConstacyclicCode c = ConstacyclicCode::make(n, a, g);
        const DistanceResult res = min_distance(c.genmatrix(), dist);
        return params_string(n, c.dim(), res.d);
    }

    std::string report_check(ConstructionReport&& r, bool with_bound = true) {
        compute_actual_distance(r, dist);
        if (!with_bound) return params_string(r.code.params().n, r.code.params().k, *r.actual_d);
        return params_with_bound(r.code.params().n, r.code.params().k, *r.actual_d,
                                 r.bound_value);
    }
};

}  // namespace

VerifyReport run_reference_checks(bool skip_slow, const DistanceOptions& dist,
                                  const ReferenceFixtures& fx) {
    Runner run;
    run.dist = dist;
    BuildOptions build_opts;
    build_opts.dist = dist;

    const PrimeField f3(3), f5(5), f7(7);

    for (const auto& g : fx.gcd_cases) {
        const std::string name = "gcd(x^" + std::to_string(g.n1) + "-" + std::to_string(g.a1) +
                                 ", x^" + std::to_string(g.n2) + "-" + std::to_string(g.a2) +
                                 ") over GF(7)";
        run.add(name, coeff_array_string(Poly::from_coeffs(f7, g.expected)), [&] {
            return coeff_array_string(
                binomial_gcd(Binomial(g.n1, f7.element(g.a1)), Binomial(g.n2, f7.element(g.a2))));
        });
    }

    // shared-factor chain over GF(3)
    const Poly shared_g = Poly::from_coeffs(f3, fx.shared_g);
    run.add("constacyclic constituent [20,6,9] q=3", "[20,6,9]", [&] {
        const Poly hh1 = poly_divmod(Poly::binomial_xn_minus_a(f3, 20, 2), shared_g).first;
        return run.constacyclic_check(20, f3.element(2), hh1);
    });
    run.add("constacyclic constituent [40,6,18] q=3", "[40,6,18]", [&] {
        const Poly hh2 = poly_divmod(Poly::binomial_xn_minus_a(f3, 40, 1), shared_g).first;
        return run.constacyclic_check(40, f3.element(1), hh2);
    });
    run.add("shared-factor code [60,6,36] q=3", "[60,6,36] bound 27", [&] {
        const Binomial b1(20, f3.element(2)), b2(40, f3.element(1));
        const Poly gcd = binomial_gcd(b1, b2);
        const GcdSplit split{shared_g, poly_divmod(gcd, shared_g).first};
        return run.report_check(build_shared_factor(b1, b2, split,
                                                    Poly::from_coeffs(f3, fx.shared_p1),
                                                    Poly::from_coeffs(f3, fx.shared_p2),
                                                    build_opts));
    });

    run.add("corollary subcode [23,7,13] q=7", "[23,7,13]", [&] {
        const Binomial b1(7, f7.element(1)), b2(16, f7.element(1));
        const Poly g = Poly::from_coeffs(f7, fx.cor_g);
        const GcdSplit split{g, poly_divmod(b2.to_poly(), g).first};
        return run.report_check(build_corollary(b1, Poly::from_coeffs(f7, fx.cor_p1), b2, split,
                                                Poly::from_coeffs(f7, fx.cor_p2), build_opts),
                                false);
    });

    run.add("constacyclic constituent [50,4,42] q=7", "[50,4,42]", [&] {
        return run.constacyclic_check(50, f7.element(3), Poly::from_coeffs(f7, fx.opt_g2));
    });
    run.add("subcode [54,4,44] q=7", "[54,4,44] bound 43", [&] {
        const std::vector<SubcodeSumPart> parts{
            {Binomial(4, f7.element(2)), Poly::one(f7), Poly::one(f7)},
            {Binomial(50, f7.element(3)), Poly::from_coeffs(f7, fx.opt_g2),
             Poly::from_coeffs(f7, fx.opt_p2)}};
        return run.report_check(build_subcode_sum(parts, 4, build_opts));
    });

    run.add("constacyclic constituent [34,18,10] q=5", "[34,18,10]", [&] {
        return run.constacyclic_check(34, f5.element(2), Poly::from_coeffs(f5, fx.prime_g2));
    });
    run.add("subcode [33,12,12] q=3", "[33,12,12] bound 12", [&] {
        const std::vector<SubcodeSumPart> parts{
            {Binomial(13, f3.element(1)), Poly::from_coeffs(f3, fx.tern_g1), Poly::one(f3)},
            {Binomial(20, f3.element(2)), Poly::from_coeffs(f3, fx.tern_g2),
             Poly::from_coeffs(f3, fx.tern_p2)}};
        return run.report_check(build_subcode_sum(parts, 12, build_opts));
    });

    const std::string slow_name = "subcode [53,18,21] q=5";
    const std::string slow_expected = "[53,18,21] bound 12";
    if (skip_slow) {
        run.add_skipped(slow_name, slow_expected);
    } else {
        run.add(slow_name, slow_expected, [&] {
            const std::vector<SubcodeSumPart> parts{
                {Binomial(19, f5.element(1)), Poly::from_coeffs(f5, fx.prime_g1), Poly::one(f5)},
                {Binomial(34, f5.element(2)), Poly::from_coeffs(f5, fx.prime_g2),
                 Poly::from_coeffs(f5, fx.prime_p2)}};
            return run.report_check(build_subcode_sum(parts, 18, build_opts));
        });
    }

    run.report.overall = true;
    for (const auto& c : run.report.checks)
        if (c.status == CheckStatus::fail) run.report.overall = false;
    return run.report;
}

}  // namespace mtcodes
