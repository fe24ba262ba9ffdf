#pragma once

#include <string>
#include <vector>

#include "uqwb/module.hpp"
#include "uqwb/subspace.hpp"

namespace uqwb {

struct TypicalityVerdict {
    Rational weight;
    bool typical = false;
    std::string witness;
};

/// lambda is typical iff lambda + 1 lies in (C \ Z) u rZ for even ell and in
/// (C \ Z/2) u (r/2)Z for odd ell.
TypicalityVerdict typicality(const Session& s, const Rational& lambda);
bool is_typical(const Session& s, const Rational& lambda);

/// A simple module of the degree-0 category, either M_alpha (alpha typical)
/// or L_i (x) C_{k ell/2}. Determined by its highest weight.
struct SimpleLabel {
    bool typical = false;
    Rational highest;  // alpha, or i + k ell/2
    int i = 0;
    long k = 0;
    int dim = 0;

    std::string to_string() const;
    friend bool operator==(const SimpleLabel& a, const SimpleLabel& b) { return a.highest == b.highest && a.dim == b.dim; }
    friend bool operator<(const SimpleLabel& a, const SimpleLabel& b) {
        return a.highest != b.highest ? a.highest < b.highest : a.dim < b.dim;
    }
};

/// Dimension of the simple quotient of V(w, 0): the least t >= 1 with [t][w-t+1] = 0.
int simple_dimension(const Session& s, const Rational& w);
/// Names the simple with highest weight w and dimension d; throws
/// ConstructionError when the pair is not in the classification.
SimpleLabel identify_simple(const Session& s, const Rational& w, int d);

struct SocleData {
    Subspace socle;
    std::vector<SimpleLabel> factors;  // with multiplicity
};

/// Sum of the simple submodules. A vector v with Ev = 0 and Hv = wv generates a
/// simple submodule iff F^t v = 0 for t = simple_dimension(w).
SocleData socle(const ModuleRep& m);
/// Intersection of the maximal submodules, as the annihilator of soc(dual m).
Subspace radical(const ModuleRep& m);
/// Composition factors of m / rad(m).
std::vector<SimpleLabel> top(const ModuleRep& m);

/// Composition factors with multiplicity, sorted; computed along the socle series.
std::vector<SimpleLabel> jordan_holder(const ModuleRep& m);
/// Number of factors with the given highest weight.
int multiplicity(const std::vector<SimpleLabel>& factors, const Rational& highest);

std::string to_string(const std::vector<SimpleLabel>& factors);

}  // namespace uqwb
