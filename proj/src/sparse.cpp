#include "uqwb/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace uqwb {

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Scalar(1));
    return m;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix<Scalar>& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!d(i, j).is_zero()) m.rows_[i].emplace_back(j, d(i, j));
    return m;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

Scalar SparseMatrix::get(std::size_t i, std::size_t j) const {
    const auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    return it != r.end() && it->first == j ? it->second : Scalar();
}

void SparseMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
        if (v.is_zero()) r.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        r.insert(it, Entry(j, v));
    }
}

void SparseMatrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
    if (v.is_zero()) return;
    auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
        it->second += v;
        if (it->second.is_zero()) r.erase(it);
    } else {
        r.insert(it, Entry(j, v));
    }
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace_back(i, v);
    return t;
}

DenseMatrix<Scalar> SparseMatrix::to_dense() const {
    DenseMatrix<Scalar> d(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rows_[i]) d(i, j) = v;
    return d;
}

Vec SparseMatrix::apply(const Vec& v) const {
    Vec out(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
        Scalar acc;
        for (const auto& [j, a] : rows_[i])
            if (!v[j].is_zero()) acc += a * v[j];
        out[i] = std::move(acc);
    }
    return out;
}

DenseMatrix<Scalar> SparseMatrix::block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    DenseMatrix<Scalar> d(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        const auto& r = rows_[rows[a]];
        for (std::size_t b = 0; b < cols.size(); ++b) {
            auto it = std::lower_bound(r.begin(), r.end(), cols[b], [](const Entry& e, std::size_t c) { return e.first < c; });
            if (it != r.end() && it->first == cols[b]) d(a, b) = it->second;
        }
    }
    return d;
}

namespace {

std::vector<SparseMatrix::Entry> merge_rows(const std::vector<SparseMatrix::Entry>& a,
                                            const std::vector<SparseMatrix::Entry>& b, bool subtract) {
    std::vector<SparseMatrix::Entry> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            Scalar s = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
    if (rows() != o.rows() || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
    for (std::size_t i = 0; i < rows(); ++i)
        if (!o.rows_[i].empty()) rows_[i] = merge_rows(rows_[i], o.rows_[i], false);
    return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
    if (rows() != o.rows() || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
    for (std::size_t i = 0; i < rows(); ++i)
        if (!o.rows_[i].empty()) rows_[i] = merge_rows(rows_[i], o.rows_[i], true);
    return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw std::invalid_argument("matrix shape mismatch in *");
    SparseMatrix c(a.rows(), b.cols_);
    std::vector<Scalar> acc(b.cols_);
    std::vector<char> used(b.cols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        touched.clear();
        for (const auto& [k, x] : a.rows_[i])
            for (const auto& [j, y] : b.rows_[k]) {
                if (!used[j]) {
                    used[j] = 1;
                    touched.push_back(j);
                }
                acc[j] += x * y;
            }
        std::sort(touched.begin(), touched.end());
        auto& out = c.rows_[i];
        for (std::size_t j : touched) {
            if (!acc[j].is_zero()) out.emplace_back(j, std::move(acc[j]));
            acc[j] = Scalar();
            used[j] = 0;
        }
    }
    return c;
}

SparseMatrix operator*(const Scalar& s, const SparseMatrix& a) {
    SparseMatrix c(a.rows(), a.cols_);
    if (s.is_zero()) return c;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.rows_[i]) c.rows_[i].emplace_back(j, s * v);
    return c;
}

SparseMatrix SparseMatrix::kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix c(a.rows() * b.rows(), a.cols_ * b.cols_);
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ib = 0; ib < b.rows(); ++ib) {
            auto& out = c.rows_[ia * b.rows() + ib];
            for (const auto& [ja, x] : a.rows_[ia])
                for (const auto& [jb, y] : b.rows_[ib]) out.emplace_back(ja * b.cols_ + jb, x * y);
        }
    return c;
}

std::string SparseMatrix::first_difference(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_) return "shape mismatch";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.rows_[i] == b.rows_[i]) continue;
        std::size_t p = 0, q = 0;
        const auto& x = a.rows_[i];
        const auto& y = b.rows_[i];
        while (p < x.size() || q < y.size()) {
            std::size_t j;
            Scalar u, v;
            if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
                j = x[p].first;
                u = x[p++].second;
            } else if (p == x.size() || y[q].first < x[p].first) {
                j = y[q].first;
                v = y[q++].second;
            } else {
                j = x[p].first;
                u = x[p++].second;
                v = y[q++].second;
            }
            if (!(u == v))
                return "(" + std::to_string(i) + "," + std::to_string(j) + "): " + u.to_string() + " vs " + v.to_string();
        }
    }
    return "";
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace uqwb
