#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uqwb/module.hpp"
#include "uqwb/projectives.hpp"
#include "uqwb/report.hpp"

namespace uqwb {

struct BggCell {
    Rational lambda, mu;
    int filtration = 0;  // (P_lambda : V(mu, m)) from a verified standard filtration
    int jh = 0;          // [V(mu, 0) : L_lambda]
    bool equal() const { return filtration == jh; }
};

struct BggTable {
    int m = 0;
    std::vector<Rational> weights;
    std::vector<BggCell> cells;  // row-major in (lambda, mu)
    Report report;
};

/// (i, k) with lambda = i + k ell/2 and 0 <= i <= r-2, for atypical lambda.
std::optional<ProjSpec> atypical_decomposition(const Session& s, const Rational& lambda, int m);
/// V(lambda, m) for typical lambda, otherwise P_i^m (x) C_{k ell/2}.
ModuleRep projective_cover(const Session& s, const Rational& lambda, int m);

/// Filtration multiplicities against Jordan-Holder multiplicities over all
/// pairs of the given weights.
BggTable bgg_table(const Session& s, int m, const std::vector<Rational>& weights, std::uint64_t seed = kDefaultSeed);

/// {-(r-1), ..., 2r-2} followed by the given typical weights.
std::vector<Rational> bgg_window(const Session& s, const std::vector<Rational>& typical);

}  // namespace uqwb
