#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uqwb/module.hpp"
#include "uqwb/report.hpp"
#include "uqwb/structure.hpp"

namespace uqwb {

enum class QuotientKind { Verma, DualVerma };

struct QuotientClaim {
    QuotientKind kind = QuotientKind::Verma;
    Rational weight;
    int degree = 0;
};

/// 0 = M_0 < M_1 < ... < M_n = M with claimed identifications of M_{k+1}/M_k.
struct FiltrationCertificate {
    std::vector<std::vector<Vec>> chain;  // basis of each M_k in full coordinates
    std::vector<QuotientClaim> claims;    // claims[k] describes M_{k+1}/M_k
};

struct FiltrationResult {
    std::optional<FiltrationCertificate> certificate;
    std::string note;
    bool found() const { return certificate.has_value(); }
};

/// Greedy bottom-up search: repeatedly take a degree-deg highest weight vector
/// of maximal weight generating a copy of V(mu, deg) in the current quotient.
/// Failure means this strategy found nothing, not that no filtration exists.
FiltrationResult extract_standard_filtration(const ModuleRep& m, int deg, std::uint64_t seed = kDefaultSeed);
/// Standard filtration of dual(m) transported back through annihilators.
FiltrationResult extract_costandard_filtration(const ModuleRep& m, int deg, std::uint64_t seed = kDefaultSeed);

/// Re-checks a certificate from scratch: chain shape, closure, and each
/// quotient against its claim.
Report verify_certificate(const ModuleRep& m, const FiltrationCertificate& c, std::uint64_t seed = kDefaultSeed);

/// upper / lower for submodules lower <= upper of m, given by spanning vectors.
ModuleRep subquotient(const ModuleRep& m, const std::vector<Vec>& lower, const std::vector<Vec>& upper);

std::string to_string(QuotientKind k);

}  // namespace uqwb
