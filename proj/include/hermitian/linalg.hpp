#pragma once

#include <cstdint>
#include <vector>

#include "field.hpp"

namespace hermitian {

/// Dense row-major matrix of field elements, stored as raw indices of one field.
class FieldMatrix {
  public:
    FieldMatrix() = default;
    FieldMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t raw(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set_raw(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v; }

    FieldElement at(std::size_t r, std::size_t c) const { return {field_, raw(r, c)}; }
    void set(std::size_t r, std::size_t c, const FieldElement& v) {
        if (!v.spec()->same_as(*field_)) throw FieldMismatch();
        set_raw(r, c, v.value());
    }

    const std::uint32_t* row_data(std::size_t r) const { return data_.data() + r * cols_; }

    bool operator==(const FieldMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form in place. Pivot search: first column with a nonzero
/// entry at or below the current row, lowest such row. Returns the pivot columns.
inline std::vector<std::size_t> row_reduce(FieldMatrix& a) {
    const FieldSpec& f = *a.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.raw(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c) {
                const auto tmp = a.raw(row, c);
                a.set_raw(row, c, a.raw(piv, c));
                a.set_raw(piv, c, tmp);
            }
        const std::uint32_t scale = f.inv(a.raw(row, col));
        for (std::size_t c = 0; c < a.cols(); ++c) a.set_raw(row, c, f.mul(a.raw(row, c), scale));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.raw(r, col) == 0) continue;
            const std::uint32_t factor = a.raw(r, col);
            for (std::size_t c = 0; c < a.cols(); ++c)
                a.set_raw(r, c, f.sub(a.raw(r, c), f.mul(factor, a.raw(row, c))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(FieldMatrix a) { return row_reduce(a).size(); }

/// A matrix whose rows form a basis of the row space of a.
inline FieldMatrix row_space_basis(FieldMatrix a) {
    const std::size_t r = row_reduce(a).size();
    FieldMatrix out(a.field(), r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set_raw(i, c, a.raw(i, c));
    return out;
}

/// Basis of {v : a v = 0}, one vector per free column, in increasing free-column order.
inline std::vector<std::vector<std::uint32_t>> null_space(FieldMatrix a) {
    const FieldSpec& f = *a.field();
    const auto pivots = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(a.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(a.raw(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hermitian
