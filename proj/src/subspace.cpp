#include "uqwb/subspace.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "uqwb/errors.hpp"

namespace uqwb {

Vec Echelon::reduce(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar c = v[pivots_[k]];
        if (c.is_zero()) continue;
        const Vec& row = rows_[k];
        for (std::size_t j = 0; j < n_; ++j)
            if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    return v;
}

bool Echelon::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Echelon::insert(const Vec& v0) {
    Vec v = reduce(v0);
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    const Scalar inv = v[p].inverse();
    for (std::size_t j = p; j < n_; ++j)
        if (!v[j].is_zero()) v[j] = v[j] * inv;
    for (auto& row : rows_) {
        const Scalar c = row[p];
        if (c.is_zero()) continue;
        for (std::size_t j = p; j < n_; ++j)
            if (!v[j].is_zero()) row[j] -= c * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

Vec Echelon::coordinates(const Vec& v) const {
    Vec c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

std::vector<std::size_t> Echelon::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        if (k < pivots_.size() && pivots_[k] == j) {
            ++k;
            continue;
        }
        out.push_back(j);
    }
    return out;
}

std::vector<Vec> Echelon::orthogonal_complement() const {
    std::vector<Vec> out;
    for (std::size_t f : free_columns()) {
        Vec x(n_);
        x[f] = Scalar(1);
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (!rows_[k][f].is_zero()) x[pivots_[k]] = -rows_[k][f];
        out.push_back(std::move(x));
    }
    return out;
}

namespace {

Vec mat_vec(const DenseMatrix<Scalar>& a, const Vec& v) {
    Vec out(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) out[i] += a(i, j) * v[j];
    }
    return out;
}

}  // namespace

Vec BlockOps::apply(int gen, int b, const Vec& v, int& target) const {
    switch (gen) {
        case 0: target = up[b]; return target < 0 ? Vec{} : mat_vec(E[b], v);
        case 1: target = down[b]; return target < 0 ? Vec{} : mat_vec(F[b], v);
        default: target = b; return mat_vec(H[b], v);
    }
}

BlockOps block_ops(const ModuleRep& m) {
    BlockOps ops;
    ops.blocks = weight_blocks(m);
    const auto& bl = ops.blocks;
    const std::size_t n = bl.count();
    ops.up.assign(n, -1);
    ops.down.assign(n, -1);
    ops.E.resize(n);
    ops.F.resize(n);
    ops.H.resize(n);
    for (std::size_t b = 0; b < n; ++b) {
        ops.up[b] = bl.find(bl.weights[b] + 2);
        ops.down[b] = bl.find(bl.weights[b] - 2);
        const auto& idx = bl.members[b];
        ops.H[b] = m.H.block(idx, idx);
        if (ops.up[b] >= 0) ops.E[b] = m.E.block(bl.members[ops.up[b]], idx);
        if (ops.down[b] >= 0) ops.F[b] = m.F.block(bl.members[ops.down[b]], idx);
    }
    return ops;
}

Subspace::Subspace(const WeightBlocks& blocks) {
    ambient_ = blocks.block_of.size();
    for (const auto& idx : blocks.members) parts_.emplace_back(idx.size());
}

std::size_t Subspace::dim() const {
    std::size_t d = 0;
    for (const auto& p : parts_) d += p.rank();
    return d;
}

std::vector<Vec> Subspace::basis(const WeightBlocks& blocks) const {
    std::vector<Vec> out;
    for (std::size_t b = 0; b < parts_.size(); ++b)
        for (const auto& row : parts_[b].rows()) out.push_back(embed(blocks, static_cast<int>(b), row));
    return out;
}

bool Subspace::contains(const WeightBlocks& blocks, const Vec& full) const {
    for (std::size_t b = 0; b < parts_.size(); ++b)
        if (!parts_[b].contains(block_part(blocks, static_cast<int>(b), full))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    if (parts_.size() != o.parts_.size()) return false;
    for (std::size_t b = 0; b < parts_.size(); ++b)
        if (parts_[b].pivots() != o.parts_[b].pivots() || parts_[b].rows() != o.parts_[b].rows()) return false;
    return true;
}

Vec block_part(const WeightBlocks& blocks, int b, const Vec& full) {
    const auto& idx = blocks.members[b];
    Vec v(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) v[k] = full[idx[k]];
    return v;
}

Vec embed(const WeightBlocks& blocks, int b, const Vec& local) {
    Vec v(blocks.block_of.size());
    const auto& idx = blocks.members[b];
    for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = local[k];
    return v;
}

void saturate(const BlockOps& ops, Subspace& s, const std::vector<std::pair<int, Vec>>& seeds) {
    std::deque<std::pair<int, Vec>> queue;
    for (const auto& [b, v] : seeds)
        if (s.part(b).insert(v)) queue.emplace_back(b, v);
    while (!queue.empty()) {
        auto [b, v] = std::move(queue.front());
        queue.pop_front();
        for (int g = 0; g < 3; ++g) {
            int t;
            Vec w = ops.apply(g, b, v, t);
            if (t < 0 || is_zero(w)) continue;
            if (s.part(t).insert(w)) queue.emplace_back(t, std::move(w));
        }
    }
}

namespace {

std::vector<std::pair<int, Vec>> split_seeds(const WeightBlocks& blocks, const std::vector<Vec>& seeds) {
    std::vector<std::pair<int, Vec>> out;
    for (const auto& v : seeds)
        for (std::size_t b = 0; b < blocks.count(); ++b) {
            Vec part = block_part(blocks, static_cast<int>(b), v);
            if (!is_zero(part)) out.emplace_back(static_cast<int>(b), std::move(part));
        }
    return out;
}

}  // namespace

Subspace submodule_generated(const BlockOps& ops, const std::vector<Vec>& seeds) {
    Subspace s(ops.blocks);
    saturate(ops, s, split_seeds(ops.blocks, seeds));
    return s;
}

Subspace submodule_generated(const ModuleRep& m, const std::vector<Vec>& seeds) {
    return submodule_generated(block_ops(m), seeds);
}

Subspace span_of(const WeightBlocks& blocks, const std::vector<Vec>& vectors) {
    Subspace s(blocks);
    for (const auto& [b, v] : split_seeds(blocks, vectors)) s.part(b).insert(v);
    return s;
}

bool is_closed(const BlockOps& ops, const Subspace& s) {
    for (std::size_t b = 0; b < s.block_count(); ++b)
        for (const auto& row : s.part(b).rows())
            for (int g = 0; g < 3; ++g) {
                int t;
                Vec w = ops.apply(g, static_cast<int>(b), row, t);
                if (t >= 0 && !s.part(t).contains(w)) return false;
            }
    return true;
}

ModuleRep quotient_module(const ModuleRep& m, const Subspace& s, std::vector<std::size_t>* kept_out) {
    const BlockOps ops = block_ops(m);
    if (!is_closed(ops, s)) throw InvalidInput("quotient by a subspace that is not a submodule");
    const auto& bl = ops.blocks;
    std::vector<std::size_t> kept;
    std::vector<std::vector<std::size_t>> free(bl.count());
    for (std::size_t b = 0; b < bl.count(); ++b) {
        free[b] = s.part(static_cast<int>(b)).free_columns();
        for (std::size_t f : free[b]) kept.push_back(bl.members[b][f]);
    }
    std::sort(kept.begin(), kept.end());
    std::map<std::size_t, std::size_t> new_index;
    for (std::size_t k = 0; k < kept.size(); ++k) new_index[kept[k]] = k;

    ModuleRep q;
    q.session = m.session;
    q.max_degree = m.max_degree;
    const std::size_t n = kept.size();
    q.E = SparseMatrix(n, n);
    q.F = SparseMatrix(n, n);
    q.H = SparseMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) q.labels.push_back(m.labels[kept[k]]);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t p = kept[k];
        const int b = bl.block_of[p];
        Vec e(bl.members[b].size());
        e[bl.offset[p]] = Scalar(1);
        for (int g = 0; g < 3; ++g) {
            int t;
            Vec w = ops.apply(g, b, e, t);
            if (t < 0) continue;
            w = s.part(t).reduce(std::move(w));
            SparseMatrix& target = g == 0 ? q.E : g == 1 ? q.F : q.H;
            for (std::size_t f : free[t])
                if (!w[f].is_zero()) target.set(new_index[bl.members[t][f]], k, w[f]);
        }
    }
    relabel_degrees(q);
    if (kept_out) *kept_out = std::move(kept);
    return q;
}

ModuleRep submodule_module(const ModuleRep& m, const Subspace& s, std::vector<Vec>* basis_out) {
    const BlockOps ops = block_ops(m);
    const auto& bl = ops.blocks;
    std::vector<std::size_t> start(bl.count());
    std::size_t n = 0;
    for (std::size_t b = 0; b < bl.count(); ++b) {
        start[b] = n;
        n += s.part(static_cast<int>(b)).rank();
    }
    ModuleRep sub;
    sub.session = m.session;
    sub.max_degree = m.max_degree;
    sub.E = SparseMatrix(n, n);
    sub.F = SparseMatrix(n, n);
    sub.H = SparseMatrix(n, n);
    for (std::size_t b = 0; b < bl.count(); ++b) {
        const auto& rows = s.part(static_cast<int>(b)).rows();
        for (std::size_t k = 0; k < rows.size(); ++k) {
            sub.labels.push_back({bl.weights[b], 0, "sub"});
            for (int g = 0; g < 3; ++g) {
                int t;
                Vec w = ops.apply(g, static_cast<int>(b), rows[k], t);
                if (t < 0 || is_zero(w)) continue;
                if (!s.part(t).contains(w)) throw InvalidInput("subspace is not closed under the action");
                Vec c = s.part(t).coordinates(w);
                SparseMatrix& target = g == 0 ? sub.E : g == 1 ? sub.F : sub.H;
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (!c[j].is_zero()) target.set(start[t] + j, start[b] + k, c[j]);
            }
        }
    }
    relabel_degrees(sub);
    if (basis_out) *basis_out = s.basis(bl);
    return sub;
}

Subspace annihilator(const WeightBlocks& blocks, const Subspace& s) {
    Subspace out(blocks);
    for (std::size_t b = 0; b < blocks.count(); ++b)
        for (const auto& v : s.part(static_cast<int>(b)).orthogonal_complement()) out.part(static_cast<int>(b)).insert(v);
    return out;
}

}  // namespace uqwb
