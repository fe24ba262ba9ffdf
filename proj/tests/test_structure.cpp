#include "doctest.h"
#include "support.hpp"
#include "uqwb/dense.hpp"
#include "uqwb/projectives.hpp"
#include "uqwb/repmod.hpp"
#include "uqwb/structure.hpp"
#include "uqwb/subspace.hpp"

using namespace uqwb;
using testing::unit;

TEST_CASE("exact elimination over Q") {
    DenseMatrix<mpq_class> a(2, 3);
    a(0, 0) = 1, a(0, 1) = 2, a(0, 2) = 3;
    a(1, 0) = 2, a(1, 1) = 4, a(1, 2) = 7;
    CHECK(rank(a) == 2);
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<mpq_class>{-2, 1, 0});
    auto x = solve(a, std::vector<mpq_class>{1, 1});
    REQUIRE(x);
    CHECK(a(0, 0) * (*x)[0] + a(0, 1) * (*x)[1] + a(0, 2) * (*x)[2] == 1);
    DenseMatrix<mpq_class> sq(2, 2);
    sq(0, 0) = 2, sq(0, 1) = 1, sq(1, 0) = 1, sq(1, 1) = 1;
    CHECK(*inverse(sq) * sq == DenseMatrix<mpq_class>::identity(2));
}

TEST_CASE("generated submodules") {
    Session s = Session::make(8);
    ModuleRep v = build_generalized_verma(s, Rational(1, 2), 2);
    const std::size_t top = 2;  // F^0 v^2
    CHECK(v.labels[top].tag == "F^0 v^2");
    CHECK(submodule_generated(v, {unit(v.dim(), top)}).dim() == v.dim());
    CHECK(submodule_generated(v, {unit(v.dim(), 0)}).dim() == static_cast<std::size_t>(s.r()));
    Subspace sub = submodule_generated(v, {unit(v.dim(), 0)});
    ModuleRep q = quotient_module(v, sub);
    CHECK(q.dim() == 2u * s.r());
    CHECK(is_generalized_verma(q, Rational(1, 2), 1));
}

TEST_CASE("highest weight and dominant vectors") {
    Session s5 = Session::make(5);
    auto hw = highest_weight_vectors(build_generalized_verma(s5, Rational(3, 2), 2));
    CHECK(hw.size() == 3);
    for (const auto& h : hw) CHECK(h.weight == Rational(3, 2));
    auto hl = highest_weight_vectors(build_simple(s5, 2));
    REQUIRE(hl.size() == 1);
    CHECK(hl[0].weight == 2);
    CHECK(hl[0].degree == 0);
    // typical V(lambda, 0): brute-force kernel of (FE)^2 is the highest weight line
    ModuleRep v = build_generalized_verma(s5, Rational(3, 2), 0);
    auto dom = dominant_vectors(v);
    REQUIRE(dom.size() == 1);
    CHECK(dom[0].weight == Rational(3, 2));
    SparseMatrix fe2 = v.F * v.E * v.F * v.E;
    std::size_t kernel = v.dim() - rank(fe2.to_dense());
    CHECK(kernel == 1);
    // the generator of a projective cover is dominant of weight i and degree m
    ProjSpec spec{1, 1, 0};
    ModuleRep p = build_projective_cover(s5, spec);
    bool found = false;
    for (const auto& d : dominant_vectors(p)) found = found || (d.weight == 1 && d.degree == 1);
    CHECK(found);
}

TEST_CASE("isomorphism test") {
    Session s = Session::make(8);
    ModuleRep v = build_generalized_verma(s, Rational(1), 1);
    IsoResult self = iso_test(v, v);
    REQUIRE(self.found());
    CHECK(SparseMatrix::first_difference(*self.map * v.E, v.E * *self.map) == "");
    CHECK(iso_test(build_simple(s, 0), build_one_dim(s, 0)).found());
    CHECK_FALSE(iso_test(build_generalized_verma(s, Rational(1, 2), 0), build_generalized_verma(s, Rational(5, 2), 0)).found());
    CHECK_FALSE(iso_test(build_generalized_verma(s, Rational(0), 0), build_dual(build_generalized_verma(s, Rational(0), 0))).found());
    ModuleRep p = build_projective_cover(s, {1, 1, 0});
    CHECK(iso_test(build_dual(p), p).found());
}

TEST_CASE("generalized Verma recognition") {
    Session s = Session::make(8);
    CHECK(is_generalized_verma(build_generalized_verma(s, Rational(2), 2), Rational(2), 2));
    CHECK(is_generalized_verma_by_iso(build_generalized_verma(s, Rational(2), 2), Rational(2), 2));
    CHECK_FALSE(is_generalized_verma(build_generalized_verma(s, Rational(2), 2), Rational(2), 1));
    CHECK_FALSE(is_generalized_verma(build_simple(s, 2), Rational(2), 0));
    CHECK_FALSE(is_generalized_verma(build_dual(build_generalized_verma(s, Rational(0), 1)), Rational(0), 1));
}

TEST_CASE("projective covers contain V(j+r, m)") {
    Session s = Session::make(8);
    const ProjSpec spec{1, 1, 0};
    const int j = s.r() - 2 - spec.i;
    ModuleRep p = build_projective_cover(s, spec);
    const std::size_t w = proj_index(s, spec, {ProjFamily::R, j + s.r(), spec.m});
    CHECK(p.labels[w].weight == j + s.r());
    Subspace sub = submodule_generated(p, {unit(p.dim(), w)});
    CHECK(sub.dim() == static_cast<std::size_t>((spec.m + 1) * s.r()));
    CHECK(is_generalized_verma(submodule_module(p, sub), Rational(j + s.r()), spec.m));
    CHECK(is_generalized_verma(quotient_module(p, sub), Rational(spec.i), spec.m));
    auto hw = highest_weight_vectors(p);
    bool at_top = false, at_i = false;
    for (const auto& h : hw) {
        at_top = at_top || h.weight == j + s.r();
        at_i = at_i || h.weight == spec.i;
    }
    CHECK(at_top);
    CHECK(at_i);
}
