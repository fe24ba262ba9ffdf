#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uqwb/module.hpp"
#include "uqwb/subspace.hpp"

namespace uqwb {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct WeightedVector {
    Vec vector;  // full coordinates
    Rational weight;
    int degree = 0;
};

/// Basis of ker E, block by block, adapted to the filtration by degree.
std::vector<WeightedVector> highest_weight_vectors(const ModuleRep& m);
/// Basis of ker (FE)^2, block by block, adapted to the filtration by degree.
std::vector<WeightedVector> dominant_vectors(const ModuleRep& m);

/// Basis of ker(op) adapted to ker(op) ∩ ker(nil^(s+1)), s = 0, 1, ...;
/// each vector is paired with its degree s.
std::vector<std::pair<Vec, int>> adapted_kernel(const DenseMatrix<Scalar>& op, const DenseMatrix<Scalar>& nil);

struct IsoResult {
    std::optional<SparseMatrix> map;  // X with X rho_a(g) = rho_b(g) X, invertible
    std::string note;
    bool found() const { return map.has_value(); }
};

/// Searches for a module isomorphism a -> b. The homomorphism space is solved
/// exactly after reducing to the images of a generating set of a; invertibility
/// of a random element is certified by one specialization of tau with nonzero
/// determinant. A negative answer after three candidates is randomized.
IsoResult iso_test(const ModuleRep& a, const ModuleRep& b, std::uint64_t seed = kDefaultSeed);

/// m is V(lambda, deg): dimension (deg+1)r and generated by one highest weight
/// vector of weight lambda and degree deg.
bool is_generalized_verma(const ModuleRep& m, const Rational& lambda, int deg, std::uint64_t seed = kDefaultSeed);
/// The same question answered by iso_test against build_generalized_verma.
bool is_generalized_verma_by_iso(const ModuleRep& m, const Rational& lambda, int deg, std::uint64_t seed = kDefaultSeed);

/// Combination of the vectors with random integer coefficients in [1, 64].
Vec random_combination(std::mt19937_64& rng, const std::vector<Vec>& vectors);

}  // namespace uqwb
