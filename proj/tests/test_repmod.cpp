#include "doctest.h"
#include "support.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/relations.hpp"
#include "uqwb/repmod.hpp"
#include "uqwb/serialize.hpp"
#include "uqwb/structure.hpp"

using namespace uqwb;

namespace {

bool all_pass(const ModuleRep& m) { return verify_relations(m).pass(); }

std::size_t index_of(const ModuleRep& m, const std::string& tag) {
    for (std::size_t k = 0; k < m.dim(); ++k)
        if (m.labels[k].tag == tag) return k;
    FAIL("missing tag " << tag);
    return 0;
}

}  // namespace

TEST_CASE("one-dimensional modules") {
    Session s8 = Session::make(8);
    ModuleRep c0 = build_one_dim(s8, 0);
    CHECK(c0.dim() == 1);
    CHECK(c0.H.get(0, 0).is_zero());
    ModuleRep c1 = build_one_dim(s8, 1);
    CHECK(c1.H.get(0, 0) == Scalar(4));
    CHECK(derive_K(c1).K.get(0, 0) == Scalar(s8.q_power(4L)));
    CHECK(derive_K(c1).K.get(0, 0) == Scalar(-1));
    Session s5 = Session::make(5);
    ModuleRep c2 = build_one_dim(s5, 2);
    CHECK(c2.H.get(0, 0) == Scalar(5));
    CHECK(derive_K(c2).K.get(0, 0).is_one());
    CHECK(all_pass(c1));
    CHECK(all_pass(c2));
}

TEST_CASE("simple modules") {
    Session s = Session::make(8);
    ModuleRep l1 = build_simple(s, 1);
    CHECK(l1.E.get(0, 1).is_one());
    ModuleRep l2 = build_simple(s, 2);
    CHECK(l2.E.get(1, 2) == Scalar(s.q_power(1L) + s.q_power(-1L)));
    for (int i = 0; i <= s.r() - 2; ++i) {
        ModuleRep l = build_simple(s, i);
        CHECK(l.dim() == static_cast<std::size_t>(i + 1));
        CHECK(all_pass(l));
        auto ws = weight_decomposition(l);
        REQUIRE(ws.size() == static_cast<std::size_t>(i + 1));
        for (int k = 0; k <= i; ++k) {
            CHECK(ws[k].weight == Rational(i - 2 * k));
            CHECK(ws[k].dim == 1);
            CHECK(ws[k].degree == 0);
        }
    }
    CHECK_THROWS_AS(build_simple(s, s.r() - 1), InvalidInput);
}

TEST_CASE("generalized Verma modules") {
    for (int ell : {5, 8}) {
        Session s = Session::make(ell);
        for (const Rational& lambda : {Rational(-2), Rational(0), Rational(1), Rational(3, 2), Rational(5, 2)})
            for (int m = 0; m <= 2; ++m) {
                ModuleRep v = build_generalized_verma(s, lambda, m);
                CHECK(v.dim() == static_cast<std::size_t>((m + 1) * s.r()));
                CHECK(all_pass(v));
                for (const auto& ws : weight_decomposition(v)) {
                    CHECK(ws.dim == static_cast<std::size_t>(m + 1));
                    CHECK(ws.degree == m);
                }
            }
    }
}

TEST_CASE("K on nilpotent blocks") {
    Session s = Session::make(8);
    const Rational lambda(1, 2);
    const Scalar ql(s.q_power(lambda)), t = Scalar::tau_power(1);
    ModuleRep v1 = build_generalized_verma(s, lambda, 1);
    KPair k1 = derive_K(v1);
    const std::size_t a0 = index_of(v1, "F^0 v^0"), a1 = index_of(v1, "F^0 v^1");
    CHECK(k1.K.get(a1, a1) == ql);
    CHECK(k1.K.get(a0, a1) == ql * t);
    ModuleRep v2 = build_generalized_verma(s, lambda, 2);
    KPair k2 = derive_K(v2);
    const std::size_t b0 = index_of(v2, "F^0 v^0"), b1 = index_of(v2, "F^0 v^1"), b2 = index_of(v2, "F^0 v^2");
    CHECK(k2.K.get(b2, b2) == ql);
    CHECK(k2.K.get(b1, b2) == ql * t);
    CHECK(k2.K.get(b0, b2) == ql * t * t / Scalar(2));
    ModuleRep v0 = build_generalized_verma(s, lambda, 0);
    KPair k0 = derive_K(v0);
    for (std::size_t a = 0; a < v0.dim(); ++a) CHECK(k0.K.get(a, a) == Scalar(s.q_power(v0.labels[a].weight)));
}

TEST_CASE("K solves dK/dtau = (H - w) K blockwise") {
    // q^H = q^w exp(tau N), differentiated in the indeterminate tau
    Session s = Session::make(5);
    for (const auto& m : {build_generalized_verma(s, Rational(3, 2), 2), build_tensor(build_generalized_verma(s, Rational(1), 1), build_generalized_verma(s, Rational(0), 2))}) {
        KPair k = derive_K(m);
        SparseMatrix nil = m.H;
        for (std::size_t a = 0; a < m.dim(); ++a) nil.add_to(a, a, Scalar(-m.labels[a].weight));
        SparseMatrix deriv(m.dim(), m.dim());
        for (std::size_t a = 0; a < m.dim(); ++a)
            for (const auto& [b, x] : k.K.row(a)) deriv.set(a, b, x.derivative());
        CHECK(SparseMatrix::first_difference(deriv, nil * k.K) == "");
        CHECK(SparseMatrix::first_difference(k.K * k.Kinv, SparseMatrix::identity(m.dim())) == "");
        CHECK(k_matches_exponential(m));
    }
}

TEST_CASE("paper-literal coefficients are refused on degree-2 blocks") {
    Session p = Session::make(8, 2, CoeffMode::PaperLiteral);
    ModuleRep v2 = build_generalized_verma(p, Rational(1, 2), 2);
    CHECK_THROWS_AS(derive_K(v2), ModeUnsupported);
    KPair k = derive_K_unchecked(v2);
    CHECK(SparseMatrix::first_difference(k.K * k.Kinv, SparseMatrix::identity(v2.dim())) != "");
    Report r = verify_relations(v2);
    CHECK_FALSE(r.pass());
    bool diagnosed = false;
    for (const auto& it : r.items) diagnosed = diagnosed || it.witness.rfind("mode-unsupported", 0) == 0;
    CHECK(diagnosed);
    CHECK(all_pass(build_generalized_verma(p, Rational(1, 2), 1)));
}

TEST_CASE("corrupted matrices are caught with a witness") {
    Session s = Session::make(8);
    ModuleRep v = build_generalized_verma(s, Rational(1), 1);
    v.E.set(0, 2, v.E.get(0, 2) + Scalar(1));
    Report r = verify_relations(v);
    CHECK_FALSE(r.pass());
    bool ef = false;
    for (const auto& it : r.items)
        if (it.name.rfind("[E,F]", 0) == 0) ef = !it.pass && !it.witness.empty();
    CHECK(ef);
}

TEST_CASE("weight decomposition rejects broken modules") {
    Session s = Session::make(8);
    ModuleRep v = build_generalized_verma(s, Rational(1), 0);
    v.H.set(0, 1, Scalar(1));
    CHECK_THROWS_AS(weight_decomposition(v), ModuleInvalid);
}

TEST_CASE("duals") {
    for (int ell : {5, 8}) {
        Session s = Session::make(ell);
        std::vector<ModuleRep> ms{build_simple(s, 2), build_generalized_verma(s, Rational(1), 2), build_generalized_verma(s, Rational(3, 2), 1),
                                  build_one_dim(s, 1)};
        for (const auto& m : ms) {
            ModuleRep d = build_dual(m);
            CHECK(all_pass(d));
            CHECK(iso_test(build_dual(d), m).found());
            auto a = weight_decomposition(m), b = weight_decomposition(d);
            REQUIRE(a.size() == b.size());
            for (std::size_t k = 0; k < a.size(); ++k) {
                CHECK(a[k].weight == b[k].weight);
                CHECK(a[k].dim == b[k].dim);
            }
        }
        CHECK(iso_test(build_dual(build_simple(s, 2)), build_simple(s, 2)).found());
    }
}

TEST_CASE("tensor products") {
    Session s = Session::make(8);
    ModuleRep v = build_generalized_verma(s, Rational(1, 2), 1);
    ModuleRep t = build_tensor(v, build_simple(s, 2));
    CHECK(t.dim() == 24);
    CHECK(all_pass(t));
    CHECK(iso_test(build_tensor(v, build_one_dim(s, 0)), v).found());
    ModuleRep tt = build_tensor(build_generalized_verma(s, Rational(0), 1), build_generalized_verma(s, Rational(2), 2));
    CHECK(all_pass(tt));
    CHECK(tt.max_degree <= 3);
    for (const auto& ws : weight_decomposition(tt)) CHECK(ws.degree <= 3);
    ModuleRep sum = build_direct_sum(v, build_simple(s, 1));
    CHECK(sum.dim() == 10);
    CHECK(all_pass(sum));
    CHECK(all_pass(build_twist(v, 1)));
}

TEST_CASE("module dumps round trip") {
    Session s = Session::make(5);
    ModuleRep m = build_tensor(build_generalized_verma(s, Rational(3, 2), 1), build_simple(s, 2));
    const std::string text = module_to_json(m).dump();
    ModuleRep back = module_from_json(json::parse(text));
    CHECK(back.dim() == m.dim());
    CHECK(back.session == m.session);
    CHECK(module_to_json(back).dump() == text);
    CHECK(verify_relations(back).to_text() == verify_relations(m).to_text());
    json broken = json::parse(text);
    broken["labels"][0]["weight"] = "1/3";
    CHECK_THROWS_AS(module_from_json(broken), InvalidInput);
    broken = json::parse(text);
    broken["E"].erase(0);
    CHECK_THROWS_AS(module_from_json(broken), InvalidInput);
}
