#include "mtcodes/matrix.hpp"

#include <numeric>

namespace mtcodes {

GenMatrix GenMatrix::from_rows(const PrimeField& field,
                               const std::vector<std::vector<std::uint16_t>>& rows) {
    if (rows.empty() || rows.front().empty()) raise(errc::empty_matrix, "matrix needs rows and columns");
    GenMatrix m(field, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) raise(errc::length_mismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (rows[r][c] >= field.p()) raise(errc::out_of_range, "matrix entry exceeds modulus");
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

GenMatrix GenMatrix::identity(const PrimeField& field, std::size_t n) {
    GenMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void GenMatrix::append_row(const std::vector<std::uint16_t>& v) {
    if (v.size() != cols_) raise(errc::length_mismatch, "row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

std::pair<GenMatrix, std::vector<std::size_t>> rref_with_column_order(
    const GenMatrix& m, const std::vector<std::size_t>& column_order) {
    if (m.rows() == 0 || m.cols() == 0) raise(errc::empty_matrix, "cannot reduce an empty matrix");
    const PrimeField& f = m.field();
    GenMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;

    for (std::size_t col : column_order) {
        if (pivot_row == r.rows()) break;
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;

        if (sel != pivot_row)
            for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(sel, c), r.at(pivot_row, c));

        const std::uint32_t inv = f.inv(r.at(pivot_row, col));
        if (inv != 1)
            for (std::size_t c = 0; c < r.cols(); ++c)
                r.at(pivot_row, c) = static_cast<std::uint16_t>(f.mul(r.at(pivot_row, c), inv));

        for (std::size_t row = 0; row < r.rows(); ++row) {
            if (row == pivot_row) continue;
            const std::uint32_t factor = r.at(row, col);
            if (factor == 0) continue;
            for (std::size_t c = 0; c < r.cols(); ++c)
                r.at(row, c) = static_cast<std::uint16_t>(
                    f.sub(r.at(row, c), f.mul(factor, r.at(pivot_row, c))));
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(r), std::move(pivots)};
}

std::pair<GenMatrix, std::size_t> rref_rank(const GenMatrix& m) {
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    auto [r, pivots] = rref_with_column_order(m, order);
    return {std::move(r), pivots.size()};
}

bool same_row_space(const GenMatrix& a, const GenMatrix& b) {
    if (!(a.field() == b.field()) || a.cols() != b.cols()) return false;
    auto [ra, rka] = rref_rank(a);
    auto [rb, rkb] = rref_rank(b);
    if (rka != rkb) return false;
    for (std::size_t r = 0; r < rka; ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (ra.at(r, c) != rb.at(r, c)) return false;
    return true;
}

bool in_row_space(const GenMatrix& m, const std::vector<std::uint16_t>& v) {
    if (v.size() != m.cols()) raise(errc::length_mismatch, "vector length mismatch");
    GenMatrix stacked = m;
    stacked.append_row(v);
    return rref_rank(stacked).second == rref_rank(m).second;
}

void CodeParams::set_distance(std::uint32_t dist) {
    if (dist < 1 || dist > n - k + 1)
        raise(errc::out_of_range, "distance violates the Singleton bound");
    d = dist;
}

}  // namespace mtcodes
