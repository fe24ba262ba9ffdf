#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace uqwb {

/// Field operations used by the generic elimination routines. The default
/// forwards to member functions (`is_zero`, `inverse`, `length`).
template <class T>
struct FieldTraits {
    static bool is_zero(const T& x) { return x.is_zero(); }
    static T inverse(const T& x) { return x.inverse(); }
    static std::size_t cost(const T& x) { return x.length(); }
};

template <>
struct FieldTraits<mpq_class> {
    static bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
    static mpq_class inverse(const mpq_class& x) { return 1 / x; }
    static std::size_t cost(const mpq_class& x) {
        return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
    }
};

/// Row-major dense matrix over an exact field.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void append_row(const std::vector<T>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }
    void truncate_rows(std::size_t n) {
        rows_ = n;
        data_.resize(n * cols_);
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        DenseMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (FieldTraits<T>::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& y = b(k, j);
                    if (FieldTraits<T>::is_zero(y)) continue;
                    c(i, j) += x * y;
                }
            }
        return c;
    }
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Reduces `a` in place to reduced row echelon form (pivots normalized to 1,
/// zero rows dropped) and returns the pivot columns in increasing order.
/// Among candidate pivots of a column the cheapest entry is chosen.
template <class T>
std::vector<std::size_t> rref(DenseMatrix<T>& a) {
    using F = FieldTraits<T>;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t best = a.rows();
        std::size_t best_cost = 0;
        for (std::size_t r = rank; r < a.rows(); ++r) {
            if (F::is_zero(a(r, col))) continue;
            std::size_t c = F::cost(a(r, col));
            if (best == a.rows() || c < best_cost) {
                best = r;
                best_cost = c;
            }
        }
        if (best == a.rows()) continue;
        a.swap_rows(rank, best);
        T inv = F::inverse(a(rank, col));
        for (std::size_t j = col; j < a.cols(); ++j)
            if (!F::is_zero(a(rank, j))) a(rank, j) = a(rank, j) * inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == rank || F::is_zero(a(r, col))) continue;
            T factor = a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) {
                if (F::is_zero(a(rank, j))) continue;
                a(r, j) -= factor * a(rank, j);
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    a.truncate_rows(rank);
    return pivots;
}

template <class T>
std::size_t rank(DenseMatrix<T> a) {
    return rref(a).size();
}

/// Basis of { x : a x = 0 }.
template <class T>
std::vector<std::vector<T>> nullspace(DenseMatrix<T> a) {
    auto pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(a.cols());
        v[free] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!FieldTraits<T>::is_zero(a(r, free))) v[pivots[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const DenseMatrix<T>& a, const std::vector<T>& b) {
    DenseMatrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    std::vector<T> x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols()) return std::nullopt;
        x[pivots[r]] = aug(r, a.cols());
    }
    return x;
}

template <class T>
std::optional<DenseMatrix<T>> inverse(const DenseMatrix<T>& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) return std::nullopt;
    DenseMatrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = T(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    DenseMatrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace uqwb
