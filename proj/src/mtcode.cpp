#include "mtcodes/mtcode.hpp"

namespace mtcodes {

MTGenerator::MTGenerator(std::vector<MTBlock> blocks, std::vector<Poly> polys)
    : blocks_(std::move(blocks)), polys_(std::move(polys)) {
    if (blocks_.empty() || blocks_.size() != polys_.size())
        raise(errc::length_mismatch, "generator needs one polynomial per block");
    const PrimeField& f = blocks_.front().a.field();
    for (const auto& b : blocks_)
        if (!(b.a.field() == f)) raise(errc::field_mismatch, "blocks over distinct fields");
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        if (!(polys_[i].field() == f)) raise(errc::field_mismatch, "polynomial field mismatch");
        polys_[i] = reduce_mod_binomial(polys_[i], blocks_[i].m, blocks_[i].a.value());
    }
}

std::vector<std::uint16_t> MTGenerator::to_vector() const {
    std::vector<std::uint16_t> v(total_length(), 0);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const auto& c = polys_[i].coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) v[offset + j] = c[j];
        offset += blocks_[i].m;
    }
    return v;
}

std::vector<std::uint16_t> mt_shift(const std::vector<std::uint16_t>& v,
                                    const std::vector<MTBlock>& blocks) {
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.m;
    if (v.size() != total) raise(errc::length_mismatch, "vector length does not match block layout");

    std::vector<std::uint16_t> out(v.size());
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        const PrimeField& f = b.a.field();
        out[offset] = static_cast<std::uint16_t>(f.mul(b.a.value(), v[offset + b.m - 1]));
        for (std::size_t i = 1; i < b.m; ++i) out[offset + i] = v[offset + i - 1];
        offset += b.m;
    }
    return out;
}

Poly mt_annihilator(const MTGenerator& gen) {
    if (gen.all_zero()) raise(errc::zero_generator, "annihilator of the zero tuple is undefined");
    const PrimeField& f = gen.field();
    Poly ann = Poly::one(f);
    for (std::size_t i = 0; i < gen.block_count(); ++i) {
        const Poly modulus = gen.blocks()[i].modulus();
        const Poly g = poly_gcd(gen.polys()[i], modulus);  // gcd(0, m) = monic m
        ann = poly_lcm(ann, poly_divmod(modulus, g).first);
    }
    return ann.monic();
}

namespace {

GenMatrix shift_span_matrix(const MTGenerator& gen, std::uint32_t rows) {
    const std::uint32_t n = gen.total_length();
    GenMatrix m(gen.field(), rows, n);
    std::vector<std::uint16_t> row = gen.to_vector();
    for (std::uint32_t r = 0; r < rows; ++r) {
        for (std::uint32_t c = 0; c < n; ++c) m.at(r, c) = row[c];
        if (r + 1 < rows) row = mt_shift(row, gen.blocks());
    }
    return m;
}

}  // namespace

MTCode make_mt_code(const MTGenerator& gen) {
    if (gen.all_zero()) raise(errc::zero_generator, "cannot realize the zero generator");
    const Poly ann = mt_annihilator(gen);
    const std::uint32_t k = static_cast<std::uint32_t>(ann.degree());
    GenMatrix matrix = shift_span_matrix(gen, k);
    const std::size_t rank = rref_rank(matrix).second;
    if (rank != k)
        raise(errc::rank_mismatch, "annihilator degree " + std::to_string(k) +
                                       " disagrees with observed rank " + std::to_string(rank));
    CodeParams params{gen.total_length(), k, gen.field().p(), std::nullopt};
    return MTCode(gen, MTKind::full, 0, std::move(matrix), params);
}

MTCode mt_subcode(const MTGenerator& gen, std::uint32_t k) {
    if (k == 0) raise(errc::out_of_range, "subcode dimension must be >= 1");
    if (gen.all_zero()) raise(errc::zero_generator, "cannot realize the zero generator");
    GenMatrix matrix = shift_span_matrix(gen, k);

    if (rref_rank(matrix).second != k) {
        // Re-run incrementally to report the first dependent shift index.
        for (std::uint32_t r = 1; r <= k; ++r) {
            GenMatrix head(gen.field(), r, matrix.cols());
            for (std::uint32_t i = 0; i < r; ++i)
                for (std::size_t c = 0; c < matrix.cols(); ++c) head.at(i, c) = matrix.at(i, c);
            if (rref_rank(head).second != r)
                raise(errc::dependent_shifts,
                      "shift row " + std::to_string(r - 1) + " depends on earlier shifts");
        }
    }
    CodeParams params{gen.total_length(), k, gen.field().p(), std::nullopt};
    return MTCode(gen, MTKind::subcode, k, std::move(matrix), params);
}

}  // namespace mtcodes
