#pragma once

#include <cstdint>
#include <vector>

#include "mtcodes/poly.hpp"

namespace mtcodes {

// x^n - a with a != 0. The coprime flag records whether gcd(n, p) = 1, the
// regime in which the binomial is squarefree.
class Binomial {
  public:
    Binomial(std::uint32_t n, const FieldElement& a);

    std::uint32_t n() const noexcept { return n_; }
    const FieldElement& a() const noexcept { return a_; }
    const PrimeField& field() const noexcept { return a_.field(); }
    bool coprime_regime() const noexcept { return coprime_; }

    Poly to_poly() const { return Poly::binomial_xn_minus_a(field(), n_, a_.value()); }

    bool operator==(const Binomial& rhs) const noexcept {
        return n_ == rhs.n_ && a_ == rhs.a_;
    }

  private:
    std::uint32_t n_;
    FieldElement a_;
    bool coprime_;
};

// Complete factorization of a binomial into monic irreducibles, in canonical
// order (degree, then coefficient sequence). The product is re-verified at
// construction time.
struct Factorization {
    Binomial input;
    std::vector<Poly> factors;
};

/// Smallest k >= 1 with q^k = 1 (mod m); requires gcd(q, m) = 1. m = 1 gives 1.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t m);

/// Distinct-degree then equal-degree splitting. Requires gcd(n, p) = 1.
Factorization factor_binomial(const Binomial& b);

/// Rabin irreducibility test; accepts any polynomial of degree >= 1.
bool is_irreducible(const Poly& f);

/// Euclidean gcd of the two binomials, with the structural postcondition
/// asserted: the result is 1 or a binomial x^d - c with d = gcd(n1, n2) and
/// c = a1^u * a2^v for a Bezout pair u*(n1/d) + v*(n2/d) = 1. Any other shape
/// throws StructureViolation.
Poly binomial_gcd(const Binomial& b1, const Binomial& b2);

/// All monic divisors of the factored binomial (subset products), canonical
/// order, truncated at `cap` entries.
std::vector<Poly> divisor_products(const Factorization& fact, std::size_t cap);

}  // namespace mtcodes
