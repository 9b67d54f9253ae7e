#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mtcodes/field.hpp"

namespace mtcodes {

// Dense k x n matrix over GF(p), row-major residues. Used as a code
// descriptor once full rank is established (rank is checked by callers, not
// assumed here).
class GenMatrix {
  public:
    GenMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static GenMatrix from_rows(const PrimeField& field,
                               const std::vector<std::vector<std::uint16_t>>& rows);
    static GenMatrix identity(const PrimeField& field, std::size_t n);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint16_t& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::uint16_t at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    const std::uint16_t* row(std::size_t r) const noexcept { return data_.data() + r * cols_; }
    std::uint16_t* row(std::size_t r) noexcept { return data_.data() + r * cols_; }

    std::vector<std::uint16_t> row_vec(std::size_t r) const {
        return {row(r), row(r) + cols_};
    }

    void append_row(const std::vector<std::uint16_t>& v);

    bool operator==(const GenMatrix& rhs) const noexcept {
        return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
               data_ == rhs.data_;
    }

  private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint16_t> data_;
};

/// Reduced row-echelon form plus rank; the row space is preserved.
std::pair<GenMatrix, std::size_t> rref_rank(const GenMatrix& m);

/// RREF where pivot columns are chosen by the given priority order. Returns
/// the reduced matrix and the pivot column of each pivot row.
std::pair<GenMatrix, std::vector<std::size_t>> rref_with_column_order(
    const GenMatrix& m, const std::vector<std::size_t>& column_order);

/// True iff the two matrices span the same row space.
bool same_row_space(const GenMatrix& a, const GenMatrix& b);

/// True iff v lies in the row space of m.
bool in_row_space(const GenMatrix& m, const std::vector<std::uint16_t>& v);

// Basic parameters [n, k, d] over GF(q). d stays empty until a distance
// engine has run; when set it must respect the Singleton bound.
struct CodeParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::optional<std::uint32_t> d;

    void set_distance(std::uint32_t dist);
    bool operator==(const CodeParams&) const noexcept = default;
};

}  // namespace mtcodes
