#pragma once

#include "uqwb/module.hpp"
#include "uqwb/report.hpp"

namespace uqwb {

/// Checks the defining relations of the algebra as exact matrix identities,
/// plus consistency of the derived K with H. Failures carry a witness entry.
Report verify_relations(const ModuleRep& m);

/// K and K^-1 recomputed by nested (Horner) evaluation of the exponential
/// series, independent of the power-sum used by derive_K.
bool k_matches_exponential(const ModuleRep& m, std::string* witness = nullptr);

}  // namespace uqwb
