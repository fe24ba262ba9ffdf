#pragma once

#include <cstddef>
#include <vector>

#include "uqwb/dense.hpp"
#include "uqwb/module.hpp"

namespace uqwb {

/// Reduced echelon basis of a subspace of Scalar^n, built incrementally.
/// Pivots are leftmost nonzero entries and are normalized to 1.
class Echelon {
public:
    explicit Echelon(std::size_t n = 0) : n_(n) {}

    std::size_t ambient() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its projection onto the span along the pivot coordinates.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    /// Adds v; returns false when v was already in the span.
    bool insert(const Vec& v);
    /// Coordinates of a member of the span in terms of rows().
    Vec coordinates(const Vec& v) const;
    /// Indices that are not pivots, in increasing order.
    std::vector<std::size_t> free_columns() const;
    /// Basis of the solutions x of <row, x> = 0 for every row.
    std::vector<Vec> orthogonal_complement() const;

private:
    std::size_t n_;
    std::vector<Vec> rows_;  // sorted by pivot
    std::vector<std::size_t> pivots_;
};

/// The operators of a module cut into dense blocks between weight spaces.
struct BlockOps {
    WeightBlocks blocks;
    std::vector<int> up, down;  // block of weight w+2 / w-2, or -1
    std::vector<DenseMatrix<Scalar>> E, F, H;  // E[b]: block b -> up[b]

    std::size_t dim(int b) const { return blocks.members[b].size(); }
    /// Image of a block-b vector under the generator (0 = E, 1 = F, 2 = H);
    /// target block through `target` (-1 when the image is zero).
    Vec apply(int gen, int b, const Vec& v, int& target) const;
};

BlockOps block_ops(const ModuleRep& m);

/// H-stable subspace stored as one echelon basis per weight block.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(const WeightBlocks& blocks);

    std::size_t dim() const;
    std::size_t ambient() const { return ambient_; }
    const Echelon& part(int b) const { return parts_[b]; }
    Echelon& part(int b) { return parts_[b]; }
    std::size_t block_count() const { return parts_.size(); }

    /// Basis as full coordinate vectors, block by block.
    std::vector<Vec> basis(const WeightBlocks& blocks) const;
    bool contains(const WeightBlocks& blocks, const Vec& full) const;
    bool operator==(const Subspace& o) const;

private:
    std::size_t ambient_ = 0;
    std::vector<Echelon> parts_;
};

/// Restriction of a full vector to block b, and the inverse embedding.
Vec block_part(const WeightBlocks& blocks, int b, const Vec& full);
Vec embed(const WeightBlocks& blocks, int b, const Vec& local);

/// Closes `s` under E, F and H after adding the seeds (block-local vectors).
void saturate(const BlockOps& ops, Subspace& s, const std::vector<std::pair<int, Vec>>& seeds);
/// Least submodule containing the given full vectors.
Subspace submodule_generated(const ModuleRep& m, const std::vector<Vec>& seeds);
Subspace submodule_generated(const BlockOps& ops, const std::vector<Vec>& seeds);
/// Subspace spanned by full vectors, closure not enforced.
Subspace span_of(const WeightBlocks& blocks, const std::vector<Vec>& vectors);
bool is_closed(const BlockOps& ops, const Subspace& s);

/// m / s on the basis of standard vectors at non-pivot positions; `kept`
/// receives their indices in m. Throws InvalidInput when s is not closed.
ModuleRep quotient_module(const ModuleRep& m, const Subspace& s, std::vector<std::size_t>* kept = nullptr);
/// s as a module on its echelon basis; `basis` receives the basis in m.
ModuleRep submodule_module(const ModuleRep& m, const Subspace& s, std::vector<Vec>* basis = nullptr);
/// { x in m : <phi, x> = 0 for phi in s } where s lives in the dual of m.
Subspace annihilator(const WeightBlocks& blocks, const Subspace& s);

}  // namespace uqwb
