#include "modp/matrix.hpp"

#include <algorithm>
#include <string>

#include "modp/error.hpp"

namespace modp {

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, PrimeModulus modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {}

MatrixFp::MatrixFp(std::initializer_list<std::initializer_list<std::int64_t>> rows, PrimeModulus modulus)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), modulus_(modulus) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::PreconditionUnmet, "ragged matrix literal");
        for (auto v : r) data_.push_back(modulus_.reduce(v));
    }
}

void MatrixFp::append_row(std::span<const Residue> values) {
    if (values.size() != cols_)
        throw Error(ErrorCode::PreconditionUnmet, "row length " + std::to_string(values.size()) +
                                                      " does not match " + std::to_string(cols_));
    for (auto v : values) data_.push_back(v % modulus_.value());
    ++rows_;
}

MatrixFp MatrixFp::transpose() const {
    MatrixFp t(cols_, rows_, modulus_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

MatrixFp MatrixFp::select_columns(std::span<const std::size_t> columns) const {
    MatrixFp out(rows_, columns.size(), modulus_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j] >= cols_) throw Error(ErrorCode::PreconditionUnmet, "column index out of range");
            out(r, j) = (*this)(r, columns[j]);
        }
    return out;
}

MatrixFp MatrixFp::stack(const MatrixFp& other) const {
    if (!(modulus_ == other.modulus_)) throw Error(ErrorCode::MixedContext, "stacking matrices over different fields");
    if (cols_ != other.cols_ && rows_ != 0 && other.rows_ != 0)
        throw Error(ErrorCode::PreconditionUnmet, "stacking matrices with different column counts");
    MatrixFp out(0, std::max(cols_, other.cols_), modulus_);
    out.data_ = data_;
    out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
    out.rows_ = rows_ + other.rows_;
    return out;
}

Echelon row_echelon(const MatrixFp& m, bool reduced) {
    const PrimeModulus& f = m.modulus();
    Echelon e{m, {}, {}};
    MatrixFp& a = e.form;
    std::vector<std::size_t> origin(a.rows());
    for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;

    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != rank) {
            std::swap_ranges(a.row(pivot).begin(), a.row(pivot).end(), a.row(rank).begin());
            std::swap(origin[pivot], origin[rank]);
        }
        auto prow = a.row(rank);
        Residue scale = f.inv(prow[c]);
        for (std::size_t j = c; j < a.cols(); ++j) prow[j] = f.mul(prow[j], scale);

        std::size_t start = reduced ? 0 : rank + 1;
        for (std::size_t r = start; r < a.rows(); ++r) {
            if (r == rank) continue;
            auto row = a.row(r);
            Residue factor = row[c];
            if (factor == 0) continue;
            Residue neg = f.neg(factor);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (prow[j] != 0) row[j] = f.add(row[j], f.mul(neg, prow[j]));
        }
        e.pivot_cols.push_back(c);
        e.pivot_rows.push_back(origin[rank]);
        ++rank;
    }
    return e;
}

std::size_t rank(const MatrixFp& m) { return row_echelon(m, false).rank(); }

std::vector<VectorFp> kernel_basis(const MatrixFp& m) {
    const PrimeModulus& f = m.modulus();
    Echelon e = row_echelon(m, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<VectorFp> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        VectorFp v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t k = 0; k < e.rank(); ++k) v[e.pivot_cols[k]] = f.neg(e.form(k, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t quotient_dimension(const MatrixFp& a_rows, const MatrixFp& b_rows) {
    std::size_t ra = rank(a_rows);
    std::size_t rb = rank(b_rows);
    if (b_rows.rows() > 0 && rank(a_rows.stack(b_rows)) != ra)
        throw Error(ErrorCode::NotASubspace, "a row of B lies outside span(A)");
    return ra - rb;
}

VectorFp multiply(const MatrixFp& m, std::span<const Residue> x) {
    if (x.size() != m.cols()) throw Error(ErrorCode::PreconditionUnmet, "vector length mismatch");
    const PrimeModulus& f = m.modulus();
    VectorFp out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Residue acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), x[c]));
        out[r] = acc;
    }
    return out;
}

} // namespace modp
