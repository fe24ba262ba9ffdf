#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uqwb/module.hpp"
#include "uqwb/report.hpp"
#include "uqwb/structure.hpp"

namespace uqwb {

/// A surjection f: source -> V(lambda, m), the target in the basis of
/// build_generalized_verma.
struct Surjection {
    std::string name;
    ModuleRep source;
    SparseMatrix f;  // dim V x dim source
    Rational lambda;
    int m = 0;
};

struct SplittingSection {
    SparseMatrix g;                    // dim source x dim V
    std::vector<std::vector<Scalar>> nu;  // nu[k][k'] for k' <= k: X+X- v^k = sum nu v^k'
    std::vector<Scalar> gamma;         // gamma_k, k < m
    Report report;                     // f g = id and equivariance of g
};

/// Section of f built from w = X+X-(u_m - sum u_k), X+ = E^(r-1), X- = F^(r-1).
/// Throws InvalidInput for atypical lambda or when f is not an equivariant surjection.
SplittingSection verma_splitting_section(const Surjection& f);

/// Projection V(lambda, m) + V(mu, m) -> V(lambda, m).
Surjection direct_sum_projection(const Session& s, const Rational& lambda, const Rational& mu, int m);
/// V(lambda + i, m) (x) L onto its last standard quotient V(lambda, m), with
/// L = L_i or dual(L_i).
Surjection tensor_top_quotient(const Session& s, const Rational& lambda, int m, int i, bool dual_simple,
                               std::uint64_t seed = kDefaultSeed);

}  // namespace uqwb
