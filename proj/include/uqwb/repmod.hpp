#pragma once

#include <vector>

#include "uqwb/dense.hpp"
#include "uqwb/module.hpp"

namespace uqwb {

/// C_{k ell/2}: E = F = 0, H = k ell / 2.
ModuleRep build_one_dim(const Session& s, long k);
/// L_i, 0 <= i <= r-2, basis s_0..s_i.
ModuleRep build_simple(const Session& s, int i);
/// V(lambda, m) with basis F^t v^k at index t(m+1)+k.
ModuleRep build_generalized_verma(const Session& s, const Rational& lambda, int m);

struct KPair {
    SparseMatrix K, Kinv;
};

/// K = q^H blockwise: q^w * sum_s c_s N^s with N = H - w on the weight-w block.
/// Throws ModeUnsupported in paper-literal mode when some N^2 != 0.
KPair derive_K(const ModuleRep& m);
/// Same series without the paper-literal guard (used to exhibit its failure).
KPair derive_K_unchecked(const ModuleRep& m);
/// q^w * sum_s (sign)^s c_s nil^s for one block.
DenseMatrix<Scalar> k_block(const Session& s, const Rational& w, const DenseMatrix<Scalar>& nil, int sign);

/// Dual module: E -> -(KF)^T, F -> -(E K^-1)^T, H -> H^T.
ModuleRep build_dual(const ModuleRep& m);
/// Tensor product via the coproduct; index of a_i (x) b_j is i*dim(b) + j.
ModuleRep build_tensor(const ModuleRep& a, const ModuleRep& b);
ModuleRep build_direct_sum(const ModuleRep& a, const ModuleRep& b);
/// m (x) C_{k ell/2}.
ModuleRep build_twist(const ModuleRep& m, long k);

struct WeightSpace {
    Rational weight;
    std::size_t dim = 0;
    int degree = 0;  // largest nilpotency degree reached in the block
    std::vector<std::size_t> basis;
};

/// Generalized eigenspaces of H, checked against the matrices.
/// Throws ModuleInvalid when H does not preserve the label blocks, a block is
/// not nilpotent after the shift, or a weight lies outside (1/N)Z.
std::vector<WeightSpace> weight_decomposition(const ModuleRep& m);

}  // namespace uqwb
