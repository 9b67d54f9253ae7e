#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mtcodes/field.hpp"

namespace mtcodes {

// Dense univariate polynomial over GF(p), coefficients stored ascending
// (index = exponent). Always kept in canonical form: no trailing zeros, the
// zero polynomial is the empty coefficient vector.
class Poly {
  public:
    // Degree sentinel for the zero polynomial.
    static constexpr int kNegInf = INT32_MIN / 2;

    explicit Poly(const PrimeField& field) : field_(field) {}

    static Poly zero(const PrimeField& f) { return Poly(f); }
    static Poly one(const PrimeField& f) { return constant(f, 1); }
    static Poly constant(const PrimeField& f, std::int64_t c);
    static Poly monomial(const PrimeField& f, std::uint32_t deg, std::int64_t c = 1);
    /// x^n - a, the binomial with shift constant a.
    static Poly binomial_xn_minus_a(const PrimeField& f, std::uint32_t n, std::uint32_t a_residue);
    /// Builds from arbitrary signed integers, reducing each to a canonical residue.
    static Poly from_coeffs(const PrimeField& f, const std::vector<std::int64_t>& coeffs);
    static Poly from_residues(const PrimeField& f, std::vector<std::uint16_t> coeffs);

    const PrimeField& field() const noexcept { return field_; }
    const std::vector<std::uint16_t>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    int degree() const noexcept { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }

    std::uint32_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading_coeff() const noexcept { return c_.empty() ? 0 : c_.back(); }

    std::uint32_t eval(std::uint32_t x) const noexcept;

    bool operator==(const Poly& rhs) const noexcept {
        return field_ == rhs.field_ && c_ == rhs.c_;
    }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator-() const;

    /// Scales by a residue.
    Poly scaled(std::uint32_t s) const;
    /// Divides through by the leading coefficient. Zero stays zero.
    Poly monic() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimeField field_;
    std::vector<std::uint16_t> c_;
};

/// Quotient and remainder with deg(r) < deg(g). Throws DivisionByZeroPoly / FieldMismatch.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);

/// Monic greatest common divisor. Throws BothZero when both inputs vanish.
Poly poly_gcd(const Poly& f, const Poly& g);

/// (d, u, v) with d monic, d = u*f + v*g.
struct ExtGcdResult {
    Poly d, u, v;
};
ExtGcdResult poly_ext_gcd(const Poly& f, const Poly& g);

/// base^e mod modulus by square-and-multiply. Modulus must be nonconstant.
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& modulus);

/// Same, with the exponent given as bits, most significant first.
Poly poly_powmod_bits(const Poly& base, const std::vector<bool>& e_bits, const Poly& modulus);

/// Remainder of f modulo x^n - a in O(deg f) by folding high coefficients down.
Poly reduce_mod_binomial(const Poly& f, std::uint32_t n, std::uint32_t a_residue);

/// Monic least common multiple.
Poly poly_lcm(const Poly& f, const Poly& g);

/// True iff g divides f exactly.
bool poly_divides(const Poly& g, const Poly& f);

/// Total order used for canonical factor lists: degree first, then coefficient
/// sequence lexicographically from the constant term up.
bool poly_less(const Poly& a, const Poly& b);

/// Ascending coefficient array rendering, e.g. "[5,0,0,0,0,1]" for x^5 + 5.
std::string coeff_array_string(const Poly& p);

}  // namespace mtcodes
