#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

#include "knotcord/errors.hpp"

namespace knotcord {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// The 0x0 matrix is legal and has determinant 1.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /// Builds from nested rows; throws InputError unless rectangular.
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row[dst] += f * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& f);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& f);
    void negate_row(std::size_t i);

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const;

    /// Exact inverse over the rationals; throws SingularPresentation if det = 0.
    std::vector<std::vector<Rat>> inverse_rational() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

} // namespace knotcord
