#include "mtcodes/error.hpp"

namespace mtcodes {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::not_prime: return "NotPrime";
        case errc::out_of_range: return "OutOfRange";
        case errc::zero_element: return "ZeroElement";
        case errc::division_by_zero_poly: return "DivisionByZeroPoly";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::both_zero: return "BothZero";
        case errc::constant_modulus: return "ConstantModulus";
        case errc::not_coprime: return "NotCoprime";
        case errc::not_squarefree_regime: return "NotSquarefreeRegime";
        case errc::constant_poly: return "ConstantPoly";
        case errc::structure_violation: return "StructureViolation";
        case errc::empty_matrix: return "EmptyMatrix";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::rank_deficient: return "RankDeficient";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::degenerate_generator: return "DegenerateGenerator";
        case errc::zero_generator: return "ZeroGenerator";
        case errc::not_canonical: return "NotCanonical";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::rank_mismatch: return "RankMismatch";
        case errc::dependent_shifts: return "DependentShifts";
        case errc::gcd_not_one: return "GcdNotOne";
        case errc::hypothesis_violation: return "HypothesisViolation";
        case errc::unequal_dimensions: return "UnequalDimensions";
        case errc::exhausted_rejections: return "ExhaustedRejections";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace mtcodes
