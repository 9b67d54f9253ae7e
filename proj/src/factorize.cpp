#include "mtcodes/factorize.hpp"

#include <algorithm>
#include <numeric>

#include "mtcodes/rng.hpp"

namespace mtcodes {

namespace {

// Bits of (p^d - 1) / 2, most significant first. The exponent overflows u64
// already for p = 3, d = 41, so it is built in a throwaway little-endian
// base-2^32 accumulator.
std::vector<bool> half_group_order_bits(std::uint32_t p, std::uint32_t d) {
    std::vector<std::uint32_t> limbs{1};
    for (std::uint32_t i = 0; i < d; ++i) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs) {
            const std::uint64_t v = static_cast<std::uint64_t>(limb) * p + carry;
            limb = static_cast<std::uint32_t>(v);
            carry = v >> 32;
        }
        if (carry) limbs.push_back(static_cast<std::uint32_t>(carry));
    }
    limbs[0] -= 1;  // p^d is odd*odd... p odd => p^d odd, no borrow
    // divide by 2
    for (std::size_t i = 0; i + 1 < limbs.size(); ++i)
        limbs[i] = (limbs[i] >> 1) | (limbs[i + 1] << 31);
    limbs.back() >>= 1;

    std::vector<bool> bits;
    bool seen = false;
    for (std::size_t i = limbs.size(); i-- > 0;) {
        for (int b = 31; b >= 0; --b) {
            const bool bit = (limbs[i] >> b) & 1;
            if (!seen && !bit) continue;
            seen = true;
            bits.push_back(bit);
        }
    }
    if (bits.empty()) bits.push_back(false);
    return bits;
}

Poly random_poly_below(const PrimeField& f, std::uint32_t deg_bound, SplitMix64& rng) {
    std::vector<std::uint16_t> c(deg_bound);
    for (auto& v : c) v = static_cast<std::uint16_t>(rng.below(f.p()));
    return Poly::from_residues(f, std::move(c));
}

// Cantor-Zassenhaus equal-degree splitting of a squarefree product of
// degree-d irreducibles.
void equal_degree_split(const Poly& f, std::uint32_t d, SplitMix64& rng, std::vector<Poly>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    const PrimeField& fld = f.field();
    const std::uint32_t p = fld.p();
    const Poly one = Poly::one(fld);

    for (;;) {
        Poly r = random_poly_below(fld, static_cast<std::uint32_t>(f.degree()), rng);
        if (r.is_zero()) continue;

        Poly g(fld);
        if (p == 2) {
            // trace map sum r^(2^i), i < d
            Poly t = poly_divmod(r, f).second;
            Poly sum = t;
            for (std::uint32_t i = 1; i < d; ++i) {
                t = poly_divmod(t * t, f).second;
                sum = sum + t;
            }
            g = poly_gcd(sum, f);
        } else {
            const Poly rp = poly_powmod_bits(r, half_group_order_bits(p, d), f);
            g = poly_gcd(rp - one, f);
        }

        if (g.degree() > 0 && g.degree() < f.degree()) {
            const Poly h = poly_divmod(f, g).first;
            equal_degree_split(g, d, rng, out);
            equal_degree_split(h, d, rng, out);
            return;
        }
    }
}

}  // namespace

Binomial::Binomial(std::uint32_t n, const FieldElement& a) : n_(n), a_(a) {
    if (n == 0) raise(errc::out_of_range, "binomial degree must be positive");
    if (a.is_zero()) raise(errc::zero_element, "binomial constant must be nonzero");
    coprime_ = std::gcd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(field().p())) == 1;
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t m) {
    if (m == 0) raise(errc::out_of_range, "modulus must be >= 1");
    if (m == 1) return 1;
    if (std::gcd(q, m) != 1) raise(errc::not_coprime, "base and modulus share a factor");
    const std::uint64_t q0 = q % m;
    std::uint64_t acc = q0;
    std::uint64_t k = 1;
    while (acc != 1) {
        acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * q0) % m);
        ++k;
    }
    return k;
}

Factorization factor_binomial(const Binomial& b) {
    if (!b.coprime_regime())
        raise(errc::not_squarefree_regime,
              "gcd(n, p) > 1: refusing to factor a non-squarefree binomial");
    const PrimeField& fld = b.field();
    const std::uint32_t p = fld.p();
    const Poly f = b.to_poly();
    const Poly x = Poly::monomial(fld, 1);

    // Deterministic stream so repeated factorizations agree; the sorted output
    // is seed-independent anyway.
    SplitMix64 rng = SplitMix64::stream(0x0fac70a1ull ^ (static_cast<std::uint64_t>(p) << 32),
                                        (static_cast<std::uint64_t>(b.n()) << 16) | b.a().value());

    std::vector<Poly> factors;
    Poly remaining = f;
    Poly h = x;  // x^(p^d) mod remaining, advanced one Frobenius power per round
    for (std::uint32_t d = 1; 2 * d <= static_cast<std::uint32_t>(remaining.degree()); ++d) {
        h = poly_powmod(h, p, remaining);
        const Poly g = poly_gcd(h - x, remaining);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, factors);
            remaining = poly_divmod(remaining, g).first;
            if (remaining.degree() < 1) break;
            h = poly_divmod(h, remaining).second;
        }
    }
    if (remaining.degree() > 0) factors.push_back(remaining.monic());

    std::sort(factors.begin(), factors.end(), poly_less);

    Poly product = Poly::one(fld);
    for (const Poly& fac : factors) product = product * fac;
    if (!(product == f))
        raise(errc::structure_violation, "factorization product does not reproduce the input");
    return {b, std::move(factors)};
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) raise(errc::constant_poly, "irreducibility needs degree >= 1");
    const std::uint32_t d = static_cast<std::uint32_t>(f.degree());
    if (d == 1) return true;
    const PrimeField& fld = f.field();
    const std::uint32_t p = fld.p();
    const Poly x = Poly::monomial(fld, 1);

    // Frobenius iterates u_i = x^(p^i) mod f.
    std::vector<Poly> frob(d + 1, Poly::zero(fld));
    frob[0] = poly_divmod(x, f).second;
    for (std::uint32_t i = 1; i <= d; ++i) frob[i] = poly_powmod(frob[i - 1], p, f);

    if (!(frob[d] == frob[0])) return false;
    for (std::uint32_t r = 2; r <= d; ++r) {
        if (d % r != 0 || !is_prime_u32(r)) continue;
        if (poly_gcd(frob[d / r] - x, f).degree() != 0) return false;
    }
    return true;
}

Poly binomial_gcd(const Binomial& b1, const Binomial& b2) {
    if (!(b1.field() == b2.field())) raise(errc::field_mismatch, "binomials over distinct fields");
    if (!b1.coprime_regime() || !b2.coprime_regime())
        raise(errc::not_squarefree_regime, "binomial gcd requires gcd(n_i, p) = 1");

    const Poly g = poly_gcd(b1.to_poly(), b2.to_poly());
    const std::uint64_t d =
        std::gcd(static_cast<std::uint64_t>(b1.n()), static_cast<std::uint64_t>(b2.n()));

    if (g.degree() == 0) return g;  // monic constant, i.e. 1

    // The only other admissible shape is x^d - c with c = a1^u * a2^v.
    const std::int64_t t1 = static_cast<std::int64_t>(b1.n() / d);
    const std::int64_t t2 = static_cast<std::int64_t>(b2.n() / d);
    std::int64_t u = 1, v = 0, u1 = 0, v1 = 1, r0 = t1, r1 = t2;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(u, u1) = std::make_pair(u1, u - q * u1);
        std::tie(v, v1) = std::make_pair(v1, v - q * v1);
    }
    const FieldElement c = b1.a().pow(u) * b2.a().pow(v);
    const Poly expected = Poly::binomial_xn_minus_a(b1.field(), static_cast<std::uint32_t>(d), c.value());
    if (!(g == expected))
        raise(errc::structure_violation,
              "euclidean gcd " + coeff_array_string(g) + " is not the predicted binomial " +
                  coeff_array_string(expected));
    return g;
}

std::vector<Poly> divisor_products(const Factorization& fact, std::size_t cap) {
    const PrimeField& fld = fact.input.field();
    std::vector<Poly> divisors{Poly::one(fld)};
    for (const Poly& f : fact.factors) {
        const std::size_t count = divisors.size();
        for (std::size_t i = 0; i < count && divisors.size() < cap; ++i)
            divisors.push_back(divisors[i] * f);
        if (divisors.size() >= cap) break;
    }
    std::sort(divisors.begin(), divisors.end(), poly_less);
    divisors.erase(std::unique(divisors.begin(), divisors.end(),
                               [](const Poly& a, const Poly& b) { return a == b; }),
                   divisors.end());
    return divisors;
}

}  // namespace mtcodes
