#pragma once

#include <cstdint>

#include "mtcodes/matrix.hpp"
#include "mtcodes/poly.hpp"

namespace mtcodes {

// Constacyclic code of length n with shift constant a: the ideal generated by
// a monic divisor g of x^n - a. h is the check polynomial (g*h = x^n - a) and
// deg(h) the dimension.
class ConstacyclicCode {
  public:
    static ConstacyclicCode make(std::uint32_t n, const FieldElement& a, const Poly& g);

    std::uint32_t n() const noexcept { return n_; }
    const FieldElement& a() const noexcept { return a_; }
    const Poly& generator() const noexcept { return g_; }
    const Poly& check_poly() const noexcept { return h_; }
    std::uint32_t dim() const noexcept { return static_cast<std::uint32_t>(h_.degree()); }
    const PrimeField& field() const noexcept { return a_.field(); }

    /// k x n matrix whose rows are x^i * g mod (x^n - a); full rank k.
    GenMatrix genmatrix() const;

  private:
    ConstacyclicCode(std::uint32_t n, const FieldElement& a, Poly g, Poly h)
        : n_(n), a_(a), g_(std::move(g)), h_(std::move(h)) {}

    std::uint32_t n_;
    FieldElement a_;
    Poly g_, h_;
};

/// One constacyclic shift: (c_0,...,c_{n-1}) -> (a*c_{n-1}, c_0,...,c_{n-2}).
std::vector<std::uint16_t> constacyclic_shift(const std::vector<std::uint16_t>& v,
                                              const FieldElement& a);

/// The unique monic least-degree generator of the ideal <g'> in
/// GF(p)[x]/(x^n - a), i.e. gcd(g', x^n - a).
Poly canonical_generator(std::uint32_t n, const FieldElement& a, const Poly& g_prime);

/// True iff <g'> = <g>, where g must itself be a monic divisor of x^n - a.
bool generators_equivalent(std::uint32_t n, const FieldElement& a, const Poly& g,
                           const Poly& g_prime);

}  // namespace mtcodes
