#pragma once

#include <cstdint>

#include "mtcodes/error.hpp"

namespace mtcodes {

bool is_prime_u32(std::uint32_t n) noexcept;

class FieldElement;

// GF(p) for a prime modulus p with 2 <= p < 2^16. Residues are carried around
// as plain uint32_t in [0, p); products of two residues fit a uint32_t, so no
// widening tricks are needed anywhere.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }
    bool operator==(const PrimeField&) const noexcept = default;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return a * b % p_; }

    std::uint32_t pow(std::uint32_t base, std::uint64_t e) const noexcept {
        std::uint32_t acc = 1 % p_;
        std::uint32_t b = base % p_;
        while (e > 0) {
            if (e & 1) acc = mul(acc, b);
            e >>= 1;
            if (e) b = mul(b, b);
        }
        return acc;
    }

    /// Multiplicative inverse, via Fermat. Throws on zero.
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) raise(errc::zero_element, "inverse of zero");
        return pow(a, p_ - 2);
    }

    /// Canonical residue of an arbitrary signed integer.
    std::uint32_t reduce_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    FieldElement element(std::int64_t v) const;
    FieldElement zero() const;
    FieldElement one() const;

  private:
    std::uint32_t p_;
};

// A residue bound to its field. Mixing elements of distinct fields throws.
class FieldElement {
  public:
    FieldElement(const PrimeField& field, std::int64_t v)
        : field_(field), value_(static_cast<std::uint16_t>(field.reduce_int(v))) {}

    std::uint32_t value() const noexcept { return value_; }
    const PrimeField& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return value_ == 0; }

    bool operator==(const FieldElement& rhs) const noexcept {
        return field_ == rhs.field_ && value_ == rhs.value_;
    }

    FieldElement operator+(const FieldElement& rhs) const {
        check_field(rhs);
        return raw(field_, field_.add(value_, rhs.value_));
    }
    FieldElement operator-(const FieldElement& rhs) const {
        check_field(rhs);
        return raw(field_, field_.sub(value_, rhs.value_));
    }
    FieldElement operator*(const FieldElement& rhs) const {
        check_field(rhs);
        return raw(field_, field_.mul(value_, rhs.value_));
    }
    FieldElement operator/(const FieldElement& rhs) const {
        check_field(rhs);
        return raw(field_, field_.mul(value_, field_.inv(rhs.value_)));
    }
    FieldElement operator-() const { return raw(field_, field_.neg(value_)); }

    FieldElement inverse() const { return raw(field_, field_.inv(value_)); }

    FieldElement pow(std::int64_t e) const {
        if (e >= 0) return raw(field_, field_.pow(value_, static_cast<std::uint64_t>(e)));
        return raw(field_, field_.pow(field_.inv(value_), static_cast<std::uint64_t>(-e)));
    }

  private:
    static FieldElement raw(const PrimeField& f, std::uint32_t v) {
        FieldElement e(f, 0);
        e.value_ = static_cast<std::uint16_t>(v);
        return e;
    }
    void check_field(const FieldElement& rhs) const {
        if (!(field_ == rhs.field_)) raise(errc::field_mismatch, "elements of distinct fields");
    }

    PrimeField field_;
    std::uint16_t value_;
};

inline FieldElement PrimeField::element(std::int64_t v) const { return FieldElement(*this, v); }
inline FieldElement PrimeField::zero() const { return FieldElement(*this, 0); }
inline FieldElement PrimeField::one() const { return FieldElement(*this, 1); }

/// Order of a in the multiplicative group GF(p)*; divides p - 1.
std::uint32_t elem_order(const FieldElement& a);

}  // namespace mtcodes
