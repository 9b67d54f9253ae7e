#pragma once

#include <cstdint>
#include <vector>

#include "mtcodes/matrix.hpp"
#include "mtcodes/poly.hpp"

namespace mtcodes {

// One block of a multi-twisted module: coordinates live in
// GF(p)[x]/(x^m - a) with a nonzero shift constant a.
struct MTBlock {
    std::uint32_t m;
    FieldElement a;

    MTBlock(std::uint32_t m_, const FieldElement& a_) : m(m_), a(a_) {
        if (m == 0) raise(errc::out_of_range, "block length must be positive");
        if (a.is_zero()) raise(errc::zero_element, "block shift constant must be nonzero");
    }

    Poly modulus() const { return Poly::binomial_xn_minus_a(a.field(), m, a.value()); }
};

// A single generator tuple (g_1, ..., g_l), each entry reduced modulo its
// block binomial. Codewords are laid out block-major, ascending exponent
// inside each block.
class MTGenerator {
  public:
    MTGenerator(std::vector<MTBlock> blocks, std::vector<Poly> polys);

    const std::vector<MTBlock>& blocks() const noexcept { return blocks_; }
    const std::vector<Poly>& polys() const noexcept { return polys_; }
    const PrimeField& field() const noexcept { return blocks_.front().a.field(); }
    std::size_t block_count() const noexcept { return blocks_.size(); }

    std::uint32_t total_length() const noexcept {
        std::uint32_t n = 0;
        for (const auto& b : blocks_) n += b.m;
        return n;
    }

    bool all_zero() const noexcept {
        for (const auto& p : polys_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Concatenated coefficient vector of the tuple.
    std::vector<std::uint16_t> to_vector() const;

  private:
    std::vector<MTBlock> blocks_;
    std::vector<Poly> polys_;
};

/// The blockwise twisted shift: every block segment maps to
/// (a_i * c_{i,m_i-1}, c_{i,0}, ..., c_{i,m_i-2}).
std::vector<std::uint16_t> mt_shift(const std::vector<std::uint16_t>& v,
                                    const std::vector<MTBlock>& blocks);

/// Monic least-degree f with f * G = 0 in every block: the lcm over blocks of
/// (x^{m_i} - a_i) / gcd(g_i, x^{m_i} - a_i). Its degree is the dimension of
/// the full one-generator code.
Poly mt_annihilator(const MTGenerator& gen);

enum class MTKind { full, subcode };

// A realized multi-twisted code: either the full span of a generator tuple or
// the subcode spanned by its first k shifts.
class MTCode {
  public:
    const MTGenerator& generator() const noexcept { return gen_; }
    MTKind kind() const noexcept { return kind_; }
    std::uint32_t subcode_k() const noexcept { return subcode_k_; }
    const GenMatrix& matrix() const noexcept { return matrix_; }
    const CodeParams& params() const noexcept { return params_; }
    CodeParams& params() noexcept { return params_; }

    MTCode(MTGenerator gen, MTKind kind, std::uint32_t subcode_k, GenMatrix matrix,
           CodeParams params)
        : gen_(std::move(gen)),
          kind_(kind),
          subcode_k_(subcode_k),
          matrix_(std::move(matrix)),
          params_(params) {}

  private:
    MTGenerator gen_;
    MTKind kind_;
    std::uint32_t subcode_k_;
    GenMatrix matrix_;
    CodeParams params_;
};

/// Full span: rows are x^i * G for i < deg(annihilator); the observed rank is
/// cross-checked against the annihilator degree.
MTCode make_mt_code(const MTGenerator& gen);

/// Span of the first k shifts; the shift rows must be linearly independent.
MTCode mt_subcode(const MTGenerator& gen, std::uint32_t k);

}  // namespace mtcodes
