#pragma once

#include <stdexcept>
#include <string>

namespace mtcodes {

// Every precondition violation and structural failure in the library maps to
// one of these codes; the CLI prints the code name in its diagnostics.
enum class errc {
    not_prime,
    out_of_range,
    zero_element,
    division_by_zero_poly,
    field_mismatch,
    both_zero,
    constant_modulus,
    not_coprime,
    not_squarefree_regime,
    constant_poly,
    structure_violation,
    empty_matrix,
    budget_exceeded,
    rank_deficient,
    not_a_divisor,
    degenerate_generator,
    zero_generator,
    not_canonical,
    length_mismatch,
    rank_mismatch,
    dependent_shifts,
    gcd_not_one,
    hypothesis_violation,
    unequal_dimensions,
    exhausted_rejections,
    parse_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace mtcodes
