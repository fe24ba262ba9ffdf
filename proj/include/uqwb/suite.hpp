#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uqwb/module.hpp"
#include "uqwb/projectives.hpp"
#include "uqwb/report.hpp"
#include "uqwb/structure.hpp"

namespace uqwb {

/// Ranges swept by the check suite: i in 0..max_i, m in 0..max_m.
struct SuiteBounds {
    int max_i = 0;
    int max_m = 0;
    std::vector<long> twists{0, 1};
    std::size_t max_dim = 256;
    /// Tensor every ordered pair of the catalogue, duals included, instead of
    /// the reduced pair set.
    bool all_pairs = false;
};

/// i up to r-2, m up to 2.
SuiteBounds default_bounds(const Session& s);
/// Largest module the suite builds outside the capped tensor pairs.
std::size_t predicted_top_dimension(const Session& s, const SuiteBounds& b);
/// Throws InvalidInput when i leaves 0..r-2, m < 0, or the predicted size
/// exceeds max_dim.
void validate_bounds(const Session& s, const SuiteBounds& b);

/// Two typical weights, 1/2 and 5/2 when both are typical.
std::vector<Rational> sample_typical_weights(const Session& s);
/// -2..4 followed by sample_typical_weights.
std::vector<Rational> verma_weights(const Session& s);

struct NamedModule {
    std::string name;
    ModuleRep module;
};

/// One-dimensional modules, simples, generalized Vermas and projective covers
/// within the bounds, followed by their duals.
std::vector<NamedModule> base_catalogue(const Session& s, const SuiteBounds& b);

struct CatalogueReports {
    Report relations;      // every module passes verify_relations
    Report k_exponential;  // derived K agrees with the nested exponential
    std::size_t modules = 0;
    std::size_t tensors = 0;
};

/// Base catalogue plus tensor pairs of dimension <= max_dim: unordered pairs
/// of non-dual modules and A (x) dual(A) for each A, or every ordered pair
/// when all_pairs is set.
CatalogueReports catalogue_checks(const Session& s, const SuiteBounds& b);

Report scalar_checks(const Session& s);
Report dimension_checks(const Session& s, const SuiteBounds& b);
Report duality_checks(const Session& s, const SuiteBounds& b, std::uint64_t seed = kDefaultSeed);
Report tensor_filtration_checks(const Session& s, const SuiteBounds& b, std::uint64_t seed = kDefaultSeed);
Report splitting_checks(const Session& s, const SuiteBounds& b, std::uint64_t seed = kDefaultSeed);
Report projective_checks(const Session& s, const SuiteBounds& b, std::uint64_t seed = kDefaultSeed);
Report cross_construction_checks(const Session& s, const std::vector<ProjSpec>& specs, std::uint64_t seed = kDefaultSeed);
Report bgg_checks(const Session& s, const SuiteBounds& b, std::uint64_t seed = kDefaultSeed);
/// Paper-literal K coefficients on a degree-2 block: derive_K must refuse with
/// the mode-unsupported diagnostic and the unguarded series must break K K^-1 = 1.
Report paper_literal_checks(int ell);

/// All of the above in order; a section that throws becomes a failed item.
Report run_suite(const Session& s, const SuiteBounds& b, std::uint64_t seed = kDefaultSeed);

}  // namespace uqwb
