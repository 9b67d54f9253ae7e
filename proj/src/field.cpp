#include "mtcodes/field.hpp"

namespace mtcodes {

bool is_prime_u32(std::uint32_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 16)) raise(errc::out_of_range, "modulus must satisfy 2 <= p < 2^16");
    if (!is_prime_u32(p)) raise(errc::not_prime, "modulus " + std::to_string(p) + " is composite");
}

std::uint32_t elem_order(const FieldElement& a) {
    if (a.is_zero()) raise(errc::zero_element, "order of zero is undefined");
    const PrimeField& f = a.field();
    std::uint32_t acc = a.value();
    std::uint32_t r = 1;
    while (acc != 1) {
        acc = f.mul(acc, a.value());
        ++r;
    }
    return r;
}

}  // namespace mtcodes
