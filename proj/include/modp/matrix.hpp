#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "modp/field.hpp"

namespace modp {

using Residue = std::uint32_t;
using VectorFp = std::vector<Residue>;

/// Dense row-major matrix over F_p.
class MatrixFp {
public:
    MatrixFp(std::size_t rows, std::size_t cols, PrimeModulus modulus);
    /// Entries are reduced mod p.
    MatrixFp(std::initializer_list<std::initializer_list<std::int64_t>> rows, PrimeModulus modulus);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const PrimeModulus& modulus() const noexcept { return modulus_; }

    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Residue> values);

    MatrixFp transpose() const;
    /// Keeps all rows and the listed columns, in the listed order.
    MatrixFp select_columns(std::span<const std::size_t> columns) const;
    /// Rows of *this followed by rows of other.
    MatrixFp stack(const MatrixFp& other) const;

    friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    PrimeModulus modulus_;
    std::vector<Residue> data_;
};

/// Result of Gaussian elimination. Pivots are chosen as the first nonzero
/// entry of each column, scanning columns left to right and rows top to
/// bottom among the rows not yet used.
struct Echelon {
    MatrixFp form;                         // row echelon (or reduced row echelon) form
    std::vector<std::size_t> pivot_cols;   // one per pivot row, increasing
    std::vector<std::size_t> pivot_rows;   // original row index that supplied each pivot
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

Echelon row_echelon(const MatrixFp& m, bool reduced);

std::size_t rank(const MatrixFp& m);

/// Basis of the right null space {x : M x = 0}. One vector per free column,
/// with 1 in that column and the negated RREF entries in the pivot columns.
std::vector<VectorFp> kernel_basis(const MatrixFp& m);

/// dim(span(A rows) / span(B rows)); throws Error(NotASubspace) when some
/// row of B is outside span(A).
std::size_t quotient_dimension(const MatrixFp& a_rows, const MatrixFp& b_rows);

/// M x computed mod p.
VectorFp multiply(const MatrixFp& m, std::span<const Residue> x);

} // namespace modp
