#pragma once

#include <cstdint>
#include <string>

#include "uqwb/module.hpp"
#include "uqwb/report.hpp"
#include "uqwb/structure.hpp"

namespace uqwb {

enum class ProjFamily { T, S, L, R };

struct ProjLabel {
    ProjFamily family = ProjFamily::T;
    long t = 0;  // weight before twisting
    int s = 0;
};

/// P_i^m (x) C_{k ell/2}.
struct ProjSpec {
    int i = 0;
    int m = 0;
    long twist = 0;
};

std::string to_string(ProjFamily f);
std::string to_string(const ProjSpec& p);

/// Position of w^X_{t,s} in the basis of build_projective_cover: families
/// T, S, L, R in this order, weights from the top of each family, then s.
std::size_t proj_index(const Session& s, const ProjSpec& spec, const ProjLabel& label);

/// Table-driven P_i^m (x) C_{k ell/2}; throws ConstructionError when the result
/// fails verify_relations.
ModuleRep build_projective_cover(const Session& s, const ProjSpec& spec);
/// Matrices only, no relation check.
ModuleRep build_projective_cover_unchecked(const Session& s, const ProjSpec& spec);

/// Recovers (i, m, twist) from the labels of a module produced by
/// build_projective_cover; throws InvalidInput otherwise.
ProjSpec infer_proj_spec(const ModuleRep& p);

/// Coefficient of (H - t)^n in sigma = [j+1][r + (H - t)]; only odd n survive,
/// so sigma vanishes in degree 0.
Scalar sigma_coefficient(const Session& s, const ProjSpec& spec, int n);

/// w^T_{i,m} generates p, every basis vector is recovered from its defining
/// word in E, F, H applied to w^T_{i,m}, and (FE)^2 w^T_{i,m} = sigma FE w^T_{i,m}
/// (zero exactly when m = 0).
Report verify_dominant_generation(const ModuleRep& p, const ProjSpec& spec);

/// (a) standard filtration V(j+r, m) < P with quotient V(i, m); (b) costandard
/// filtration; (c) dual(P) = P; (d) P / rad P = L_i (x) C_{k ell/2}.
Report certify_projcover_structure(const ModuleRep& p, const ProjSpec& spec, std::uint64_t seed = kDefaultSeed);
Report certify_projcover_structure(const Session& s, const ProjSpec& spec, std::uint64_t seed = kDefaultSeed);

/// The summand of V(lambda - mu, m) (x) S with top L_i (x) C_{k ell/2}, where S is a
/// simple module with lowest weight mu and lambda - mu typical. The summand is
/// cut out by the generalized eigenspace of the Casimir element.
ModuleRep build_via_tensor_summand(const Session& s, const ProjSpec& spec, std::uint64_t seed = kDefaultSeed);

}  // namespace uqwb
