#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "uqwb/session.hpp"
#include "uqwb/sparse.hpp"

namespace uqwb {

/// Metadata for one basis vector: generalized weight, position in its
/// nilpotent H-chain, and a family tag such as "F^2 v^1" or "T".
struct WeightLabel {
    Rational weight;
    int degree = 0;
    std::string tag;
};

/// A finite-dimensional module given by exact matrices for E, F and H.
/// K and K^-1 are never stored; see derive_K.
struct ModuleRep {
    Session session;
    std::vector<WeightLabel> labels;
    SparseMatrix E, F, H;
    int max_degree = 0;

    std::size_t dim() const { return labels.size(); }
};

/// Basis indices grouped by label weight, weights in decreasing order.
struct WeightBlocks {
    std::vector<Rational> weights;
    std::vector<std::vector<std::size_t>> members;
    std::vector<int> block_of;        // per basis index
    std::vector<std::size_t> offset;  // position of a basis index inside its block

    std::size_t count() const { return weights.size(); }
    /// Block index of weight w, or -1.
    int find(const Rational& w) const;
};

WeightBlocks weight_blocks(const ModuleRep& m);

/// Smallest s with (H - w)^(s+1) v = 0, for v supported on the weight-w block;
/// -1 for the zero vector.
int vector_degree(const ModuleRep& m, const Vec& v, const Rational& w);

/// Recomputes every label degree from the matrices.
void relabel_degrees(ModuleRep& m);

}  // namespace uqwb
