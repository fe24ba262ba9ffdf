#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "uqwb/cyclo.hpp"
#include "uqwb/module.hpp"
#include "uqwb/sparse.hpp"

namespace testing {

using cplx = std::complex<long double>;

// Floating evaluation of a power-basis element; only used as an outside oracle.
inline cplx evaluate(const uqwb::CycloNum& x, int order) {
    cplx sum = 0;
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
        const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / order;
        sum += static_cast<long double>(x.coeffs()[k].get_d()) * std::polar(1.0L, angle);
    }
    return sum;
}

inline cplx root_of_unity(long double turns) { return std::polar(1.0L, 2 * std::numbers::pi_v<long double> * turns); }

inline bool near(cplx a, cplx b, long double tol = 1e-12L) { return std::abs(a - b) < tol; }

inline uqwb::Vec unit(std::size_t n, std::size_t k) {
    uqwb::Vec v(n);
    v[k] = uqwb::Scalar(1);
    return v;
}

}  // namespace testing
