#include "doctest.h"
#include "support.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/projectives.hpp"
#include "uqwb/relations.hpp"
#include "uqwb/repmod.hpp"
#include "uqwb/serialize.hpp"
#include "uqwb/structure.hpp"

using namespace uqwb;
using testing::unit;

TEST_CASE("projective covers satisfy the relations and have dimension 2(m+1)r") {
    for (int ell : {5, 8}) {
        Session s = Session::make(ell);
        for (int i = 0; i <= s.r() - 2; ++i)
            for (int m = 0; m <= 2; ++m)
                for (long k : {0L, 1L}) {
                    ProjSpec spec{i, m, k};
                    ModuleRep p = build_projective_cover(s, spec);
                    CHECK(p.dim() == static_cast<std::size_t>(2 * (m + 1) * s.r()));
                    CHECK(verify_relations(p).pass());
                    ProjSpec back = infer_proj_spec(p);
                    CHECK(back.i == i);
                    CHECK(back.m == m);
                    CHECK(back.twist == k);
                }
    }
}

TEST_CASE("weight profile") {
    Session s = Session::make(8);
    for (int i = 0; i <= 2; ++i)
        for (int m = 0; m <= 2; ++m) {
            const int j = s.r() - 2 - i;
            ModuleRep p = build_projective_cover(s, {i, m, 0});
            std::size_t at_i = 0, at_top = 0, at_bottom = 0;
            for (const auto& ws : weight_decomposition(p)) {
                if (ws.weight == i) at_i = ws.dim;
                if (ws.weight == j + s.r()) at_top = ws.dim;
                if (ws.weight == -j - s.r()) at_bottom = ws.dim;
            }
            CHECK(at_i == static_cast<std::size_t>(2 * (m + 1)));
            CHECK(at_top == static_cast<std::size_t>(m + 1));
            CHECK(at_bottom == static_cast<std::size_t>(m + 1));
        }
}

TEST_CASE("degree-zero relations") {
    Session s = Session::make(5);
    const ProjSpec spec{1, 0, 0};
    const int j = s.r() - 2 - spec.i;
    ModuleRep p = build_projective_cover(s, spec);
    const std::size_t si = proj_index(s, spec, {ProjFamily::S, spec.i, 0});
    CHECK(is_zero(p.E.apply(unit(p.dim(), si))));
    // F^(i+1) T_i = L_(j-r), F^r T_i = 0
    const std::size_t ti = proj_index(s, spec, {ProjFamily::T, spec.i, 0});
    Vec v = unit(p.dim(), ti);
    for (int t = 0; t <= spec.i; ++t) v = p.F.apply(v);
    CHECK(v == unit(p.dim(), proj_index(s, spec, {ProjFamily::L, j - s.r(), 0})));
    for (int t = spec.i + 1; t < s.r(); ++t) v = p.F.apply(v);
    CHECK(is_zero(v));
    CHECK(sigma_coefficient(s, spec, 0).is_zero());
}

TEST_CASE("sigma only has odd powers") {
    Session s = Session::make(8);
    const ProjSpec spec{1, 2, 0};
    CHECK(sigma_coefficient(s, spec, 0).is_zero());
    CHECK_FALSE(sigma_coefficient(s, spec, 1).is_zero());
    CHECK(sigma_coefficient(s, spec, 2).is_zero());
}

TEST_CASE("dominant generation") {
    for (auto [ell, spec] : {std::pair{5, ProjSpec{1, 1, 0}}, std::pair{8, ProjSpec{0, 2, 1}}, std::pair{8, ProjSpec{2, 0, 0}}}) {
        Session s = Session::make(ell);
        Report r = verify_dominant_generation(build_projective_cover(s, spec), spec);
        CHECK_MESSAGE(r.pass(), r.to_text());
    }
    // saturation oracle: the top T vector generates everything
    Session s = Session::make(5);
    const ProjSpec spec{1, 1, 0};
    ModuleRep p = build_projective_cover(s, spec);
    CHECK(submodule_generated(p, {unit(p.dim(), proj_index(s, spec, {ProjFamily::T, 1, 1}))}).dim() == p.dim());
    CHECK(submodule_generated(p, {unit(p.dim(), proj_index(s, spec, {ProjFamily::T, 1, 0}))}).dim() < p.dim());
}

TEST_CASE("structure certificates") {
    Session s = Session::make(8);
    const ProjSpec spec{1, 1, 0};
    Report r = certify_projcover_structure(s, spec);
    CHECK_MESSAGE(r.pass(), r.to_text());
    bool sub5 = false;
    for (const auto& it : r.items) sub5 = sub5 || (it.name.rfind("(a) standard", 0) == 0 && it.pass);
    CHECK(sub5);
    Report t = certify_projcover_structure(s, ProjSpec{0, 2, 1});
    CHECK_MESSAGE(t.pass(), t.to_text());
}

TEST_CASE("certification from a serialized module") {
    Session s = Session::make(8);
    const ProjSpec spec{1, 2, 0};
    ModuleRep back = module_from_json(json::parse(module_to_json(build_projective_cover(s, spec)).dump()));
    ProjSpec inferred = infer_proj_spec(back);
    CHECK(inferred.i == 1);
    CHECK(inferred.m == 2);
    CHECK(certify_projcover_structure(back, inferred).pass());
    CHECK_THROWS_AS(infer_proj_spec(build_generalized_verma(s, Rational(1), 1)), InvalidInput);
}

TEST_CASE("tensor summand agrees with the table") {
    for (auto [ell, spec] : {std::pair{8, ProjSpec{0, 0, 0}}, std::pair{5, ProjSpec{1, 1, 0}}, std::pair{8, ProjSpec{1, 1, 1}}}) {
        Session s = Session::make(ell);
        ModuleRep a = build_via_tensor_summand(s, spec);
        CHECK(a.dim() == static_cast<std::size_t>(2 * (spec.m + 1) * s.r()));
        CHECK(verify_relations(a).pass());
        CHECK(iso_test(a, build_projective_cover(s, spec)).found());
    }
}

TEST_CASE("out-of-range projective covers") {
    Session s = Session::make(8);
    CHECK_THROWS_AS(build_projective_cover(s, {3, 0, 0}), InvalidInput);
    CHECK_THROWS_AS(build_projective_cover(s, {-1, 0, 0}), InvalidInput);
}
