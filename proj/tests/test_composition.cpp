#include "doctest.h"
#include "support.hpp"
#include "uqwb/composition.hpp"
#include "uqwb/dense.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/repmod.hpp"
#include "uqwb/subspace.hpp"

using namespace uqwb;

TEST_CASE("typicality") {
    Session s8 = Session::make(8);
    CHECK(is_typical(s8, Rational(1, 2)));
    CHECK(is_typical(s8, Rational(3)));
    CHECK_FALSE(is_typical(s8, Rational(0)));
    CHECK_FALSE(is_typical(s8, Rational(-2)));
    CHECK(is_typical(s8, Rational(-1)));
    CHECK(is_typical(s8, Rational(7)));
    Session s5 = Session::make(5);
    CHECK_FALSE(is_typical(s5, Rational(1, 2)));
    CHECK_FALSE(is_typical(s5, Rational(5, 2)));
    CHECK(is_typical(s5, Rational(3, 2)));
    CHECK(is_typical(s5, Rational(4)));
    CHECK_FALSE(is_typical(s5, Rational(0)));
    CHECK(is_typical(s5, Rational(-1)));
    CHECK_FALSE(typicality(s8, Rational(0)).witness.empty());
}

TEST_CASE("typical means E^(r-1) F^(r-1) acts invertibly on the highest weight") {
    // brute force over half-integers: the product of [t][lambda-t+1] vanishes exactly at atypical weights
    for (int ell : {5, 8}) {
        Session s = Session::make(ell);
        for (int num = -12; num <= 24; ++num) {
            Rational lambda(num, 2);
            lambda.canonicalize();
            ModuleRep v = build_generalized_verma(s, lambda, 0);
            SparseMatrix x = SparseMatrix::identity(v.dim());
            for (int t = 0; t < s.r() - 1; ++t) x = v.E * x;
            for (int t = 0; t < s.r() - 1; ++t) x = x * v.F;
            CHECK_MESSAGE(x.get(0, 0).is_zero() != is_typical(s, lambda), "ell=" << ell << " lambda=" << lambda.get_str());
        }
    }
}

TEST_CASE("simple dimensions and labels") {
    Session s = Session::make(8);
    CHECK(simple_dimension(s, Rational(0)) == 1);
    CHECK(simple_dimension(s, Rational(2)) == 3);
    CHECK(simple_dimension(s, Rational(1, 2)) == 4);
    CHECK(simple_dimension(s, Rational(-2)) == 3);
    SimpleLabel l = identify_simple(s, Rational(-2), 3);
    CHECK_FALSE(l.typical);
    CHECK(l.i == 2);
    CHECK(l.k == -1);
    CHECK(l.to_string() == "L_2 (x) C_-4");
    CHECK(identify_simple(s, Rational(1, 2), 4).typical);
    CHECK_THROWS_AS(identify_simple(s, Rational(1, 2), 2), ConstructionError);
}

TEST_CASE("Jordan-Holder of V(0,0) at ell = 8") {
    Session s = Session::make(8);
    ModuleRep v = build_generalized_verma(s, Rational(0), 0);
    // independent search: singular vectors below the top, and the submodule they generate
    auto ker = nullspace(v.E.to_dense());
    std::vector<Vec> singular;
    for (const auto& k : ker)
        if (k[0].is_zero()) singular.push_back(k);
    REQUIRE(singular.size() == 1);
    std::size_t at = 0;
    while (singular[0][at].is_zero()) ++at;
    const Rational sw = v.labels[at].weight;
    const std::size_t subdim = submodule_generated(v, singular).dim();
    CHECK(sw == -2);
    CHECK(subdim == 3);
    auto jh = jordan_holder(v);
    REQUIRE(jh.size() == 2);
    CHECK(jh[0] == identify_simple(s, sw, static_cast<int>(subdim)));
    CHECK(jh[1] == identify_simple(s, Rational(0), static_cast<int>(v.dim() - subdim)));
    CHECK(to_string(jh) == "{L_2 (x) C_-4, L_0}");
}

TEST_CASE("Jordan-Holder basics") {
    for (int ell : {5, 8}) {
        Session s = Session::make(ell);
        for (int i = 0; i <= s.r() - 2; ++i) {
            auto jh = jordan_holder(build_simple(s, i));
            REQUIRE(jh.size() == 1);
            CHECK(jh[0].highest == i);
        }
        for (const Rational& lambda : {Rational(-1), Rational(0), Rational(2), Rational(3, 2), Rational(5, 2), Rational(4)}) {
            auto j0 = jordan_holder(build_generalized_verma(s, lambda, 0));
            if (is_typical(s, lambda)) {
                REQUIRE(j0.size() == 1);
                CHECK(j0[0].typical);
            }
            for (int m = 1; m <= 2; ++m) {
                auto jm = jordan_holder(build_generalized_verma(s, lambda, m));
                CHECK(jm.size() == (m + 1) * j0.size());
                for (const auto& f : j0) CHECK(multiplicity(jm, f.highest) == (m + 1) * multiplicity(j0, f.highest));
                CHECK(jordan_holder(build_dual(build_generalized_verma(s, lambda, m))) == jm);
            }
        }
    }
}

TEST_CASE("socle, radical and top") {
    Session s = Session::make(8);
    ModuleRep v = build_generalized_verma(s, Rational(0), 0);
    SocleData soc = socle(v);
    REQUIRE(soc.factors.size() == 1);
    CHECK(soc.factors[0].highest == -2);
    CHECK(radical(v).dim() == 3);
    auto t = top(v);
    REQUIRE(t.size() == 1);
    CHECK(t[0].highest == 0);
}
