#include "doctest.h"
#include "support.hpp"
#include "uqwb/algebra.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/repmod.hpp"

using namespace uqwb;

namespace {

AlgebraElement w(const char* text) { return AlgebraElement::word(parse_word(text)); }

AlgebraElement ef_commutator(const Session& s) {
    Scalar c(s.inv_q_diff());
    return c * w("K") - c * w("Kinv");
}

}  // namespace

TEST_CASE("words parse left to right") {
    CHECK(parse_word("E F F H") == Word{Gen::E, Gen::F, Gen::F, Gen::H});
    CHECK(parse_word("K^-1 Kinv") == Word{Gen::Kinv, Gen::Kinv});
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("E X"), InvalidInput);
}

TEST_CASE("PBW normal form") {
    Session s = Session::make(8);
    CHECK(pbw_normal_form(s, w("E F")) == pbw_normal_form(s, w("F E") + ef_commutator(s)));
    CHECK(pbw_normal_form(s, w("H E")) == pbw_normal_form(s, w("E H") + Scalar(2) * w("E")));
    CHECK(pbw_normal_form(s, w("K E")) == pbw_normal_form(s, Scalar(s.q_power(2L)) * w("E K")));
    CHECK(pbw_normal_form(s, w("E E E E")).is_zero());
    CHECK(pbw_normal_form(s, w("F F F F")).is_zero());
    CHECK(pbw_normal_form(s, w("K Kinv")) == AlgebraElement::one());
    CHECK(pbw_normal_form(s, w("E F")).normal());
    auto coeffs = pbw_coefficients(s, w("E F"));
    CHECK(coeffs.at(PbwMonomial{1, 1, 0, 0}).is_one());
    CHECK(coeffs.at(PbwMonomial{0, 0, 1, 0}) == Scalar(s.inv_q_diff()));
    CHECK(coeffs.size() == 3);
}

TEST_CASE("normal form acts like the original element") {
    Session s = Session::make(5);
    ModuleRep v = build_generalized_verma(s, Rational(3, 2), 2);
    for (const char* text : {"E F", "F E E H", "H K F E", "E E F F F", "Kinv E H F"}) {
        AlgebraElement x = w(text);
        CHECK(SparseMatrix::first_difference(act(x, v), act(pbw_normal_form(s, x), v)) == "");
    }
}

TEST_CASE("omega, antipode, coproduct and counit") {
    Session s = Session::make(8);
    CHECK(omega_map(w("E")) == w("F"));
    CHECK(omega_map(w("H E")) == Scalar(-1) * w("H F"));
    CHECK(omega_map(omega_map(w("K F"))) == w("K F"));
    CHECK(pbw_normal_form(s, antipode_map(w("E"))) == pbw_normal_form(s, Scalar(-1) * w("E Kinv")));
    CHECK(antipode_map(w("H")) == Scalar(-1) * w("H"));
    CHECK(pbw_normal_form(s, antipode_map(w("E F"))) == pbw_normal_form(s, w("K F E Kinv")));
    auto dk = coproduct_expand(Gen::K);
    REQUIRE(dk.size() == 1);
    CHECK(dk[0].first == w("K"));
    CHECK(dk[0].second == w("K"));
    auto de = coproduct_expand(Gen::E);
    REQUIRE(de.size() == 2);
    CHECK(((de[0].first == AlgebraElement::one() && de[0].second == w("E") && de[1].first == w("E") && de[1].second == w("K")) ||
           (de[1].first == AlgebraElement::one() && de[1].second == w("E") && de[0].first == w("E") && de[0].second == w("K"))));
    CHECK(coproduct_expand(Gen::H).size() == 2);
    CHECK(counit(w("K")).is_one());
    CHECK(counit(w("E")).is_zero());
    CHECK(counit(w("H")).is_zero());
}

TEST_CASE("act on modules") {
    Session s = Session::make(8);
    ModuleRep v = build_generalized_verma(s, Rational(1), 1);
    CHECK(SparseMatrix::first_difference(act(AlgebraElement::one(), v), SparseMatrix::identity(v.dim())) == "");
    CHECK(SparseMatrix::first_difference(act(w("E F") - w("F E"), v), act(ef_commutator(s), v)) == "");
    CHECK(act(w("E E E E"), v).is_zero());
    CHECK(SparseMatrix::first_difference(act(w("E"), v), v.E) == "");
    // leftmost acts last
    CHECK(SparseMatrix::first_difference(act(w("E F"), v), v.E * v.F) == "");
}
