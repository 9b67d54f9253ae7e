#include "mtcodes/constacyclic.hpp"

namespace mtcodes {

ConstacyclicCode ConstacyclicCode::make(std::uint32_t n, const FieldElement& a, const Poly& g) {
    if (a.is_zero()) raise(errc::zero_element, "shift constant must be nonzero");
    if (!(g.field() == a.field())) raise(errc::field_mismatch, "generator field mismatch");
    if (g.degree() >= static_cast<int>(n))
        raise(errc::degenerate_generator, "deg(g) >= n generates the zero code");
    if (!g.is_monic()) raise(errc::not_a_divisor, "generator must be a monic divisor of x^n - a");

    const Poly modulus = Poly::binomial_xn_minus_a(a.field(), n, a.value());
    auto [h, rem] = poly_divmod(modulus, g);
    if (!rem.is_zero())
        raise(errc::not_a_divisor, coeff_array_string(g) + " does not divide x^" +
                                       std::to_string(n) + " - " + std::to_string(a.value()));
    return ConstacyclicCode(n, a, g, std::move(h));
}

GenMatrix ConstacyclicCode::genmatrix() const {
    const std::uint32_t k = dim();
    GenMatrix m(field(), k, n_);
    std::vector<std::uint16_t> row(n_, 0);
    for (std::size_t i = 0; i < g_.coeffs().size(); ++i) row[i] = g_.coeffs()[i];
    for (std::uint32_t r = 0; r < k; ++r) {
        for (std::uint32_t c = 0; c < n_; ++c) m.at(r, c) = row[c];
        if (r + 1 < k) row = constacyclic_shift(row, a_);
    }
    return m;
}

std::vector<std::uint16_t> constacyclic_shift(const std::vector<std::uint16_t>& v,
                                              const FieldElement& a) {
    if (v.empty()) raise(errc::length_mismatch, "cannot shift an empty vector");
    const PrimeField& f = a.field();
    std::vector<std::uint16_t> out(v.size());
    out[0] = static_cast<std::uint16_t>(f.mul(a.value(), v.back()));
    for (std::size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
    return out;
}

Poly canonical_generator(std::uint32_t n, const FieldElement& a, const Poly& g_prime) {
    if (g_prime.is_zero()) raise(errc::zero_generator, "zero generates nothing");
    return poly_gcd(g_prime, Poly::binomial_xn_minus_a(a.field(), n, a.value()));
}

bool generators_equivalent(std::uint32_t n, const FieldElement& a, const Poly& g,
                           const Poly& g_prime) {
    const Poly modulus = Poly::binomial_xn_minus_a(a.field(), n, a.value());
    if (!g.is_monic() || !poly_divides(g, modulus))
        raise(errc::not_canonical, "reference generator must be a monic divisor of x^n - a");
    return canonical_generator(n, a, g_prime) == g;
}

}  // namespace mtcodes
