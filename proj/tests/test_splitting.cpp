#include "doctest.h"
#include "support.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/repmod.hpp"
#include "uqwb/splitting.hpp"

using namespace uqwb;

namespace {

// E^(r-1) F^(r-1) on a highest weight vector of weight lambda
CycloNum hw_product(const Session& s, const Rational& lambda) {
    CycloNum p(1);
    for (int t = 1; t < s.r(); ++t) {
        const Rational x = lambda - t + 1;
        CycloNum qx = s.q_power(x), qmx = s.q_power(Rational(-x));
        p = p * s.quantum_integer(t) * (qx - qmx) * s.inv_q_diff();
    }
    return p;
}

}  // namespace

TEST_CASE("diagonal splitting coefficients") {
    for (auto [ell, lambda] : {std::pair{5, Rational(3, 2)}, std::pair{8, Rational(1, 2)}, std::pair{8, Rational(5, 2)}})
        for (int m = 0; m <= 2; ++m) {
            Session s = Session::make(ell);
            SplittingSection g = verma_splitting_section(direct_sum_projection(s, lambda, Rational(0), m));
            const CycloNum want = hw_product(s, lambda);
            CHECK_FALSE(want.is_zero());
            for (int k = 0; k <= m; ++k) {
                CHECK(g.nu[k][k].is_constant());
                CHECK(g.nu[k][k] == Scalar(want));
            }
        }
}

TEST_CASE("sections of three surjections") {
    for (auto [ell, lambda] : {std::pair{5, Rational(4)}, std::pair{8, Rational(5, 2)}}) {
        Session s = Session::make(ell);
        for (int m = 0; m <= 2; ++m)
            for (const Surjection& f : {direct_sum_projection(s, lambda, Rational(1), m), tensor_top_quotient(s, lambda, m, 1, false),
                                        tensor_top_quotient(s, lambda, m, 2, true)}) {
                SplittingSection g = verma_splitting_section(f);
                CHECK_MESSAGE(g.report.pass(), f.name << " " << g.report.to_text());
                CHECK(SparseMatrix::first_difference(f.f * g.g, SparseMatrix::identity(f.f.rows())) == "");
                CHECK(SparseMatrix::first_difference(f.source.E * g.g, g.g * build_generalized_verma(s, lambda, m).E) == "");
            }
    }
}

TEST_CASE("atypical weights and bad maps are refused") {
    Session s = Session::make(5);
    CHECK_THROWS_AS(verma_splitting_section(direct_sum_projection(s, Rational(1, 2), Rational(0), 1)), InvalidInput);
    Surjection f = direct_sum_projection(s, Rational(3, 2), Rational(0), 1);
    f.f = Scalar(2) * f.f;
    CHECK_NOTHROW(verma_splitting_section(f));
    f.f.set(0, 0, Scalar(0));
    CHECK_THROWS_AS(verma_splitting_section(f), InvalidInput);
}
