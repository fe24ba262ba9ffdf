#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "uqwb/dense.hpp"
#include "uqwb/scalar.hpp"

namespace uqwb {

using Vec = std::vector<Scalar>;

/// Row-compressed matrix over Scalar; each row keeps its entries sorted by column.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const DenseMatrix<Scalar>& d);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    Scalar get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void add_to(std::size_t i, std::size_t j, const Scalar& v);
    /// Replaces row i by an already sorted, zero-free entry list.
    void set_row(std::size_t i, std::vector<Entry> entries) { rows_[i] = std::move(entries); }

    SparseMatrix transpose() const;
    DenseMatrix<Scalar> to_dense() const;
    Vec apply(const Vec& v) const;
    /// Columns selected by `cols`, rows selected by `rows`, as a dense block.
    DenseMatrix<Scalar> block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    SparseMatrix& operator+=(const SparseMatrix& o);
    SparseMatrix& operator-=(const SparseMatrix& o);
    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Scalar& c, const SparseMatrix& a);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

    static SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

    /// First entry where a and b differ, as "(i,j): lhs vs rhs"; empty when equal.
    static std::string first_difference(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> rows_;
};

bool is_zero(const Vec& v);

}  // namespace uqwb
