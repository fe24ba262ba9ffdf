#include "doctest.h"
#include "support.hpp"
#include "uqwb/bgg.hpp"
#include "uqwb/composition.hpp"
#include "uqwb/repmod.hpp"

using namespace uqwb;

namespace {

const BggCell& cell(const BggTable& t, const Rational& lambda, const Rational& mu) {
    for (const auto& c : t.cells)
        if (c.lambda == lambda && c.mu == mu) return c;
    FAIL("missing cell");
    return t.cells.front();
}

}  // namespace

TEST_CASE("atypical decomposition") {
    Session s = Session::make(8);
    auto d = atypical_decomposition(s, Rational(6), 1);
    REQUIRE(d);
    CHECK(d->i == 2);
    CHECK(d->twist == 1);
    auto e = atypical_decomposition(s, Rational(-3), 0);
    REQUIRE(e);
    CHECK(e->i == 1);
    CHECK(e->twist == -1);
    CHECK_FALSE(atypical_decomposition(s, Rational(1, 2), 0));
    CHECK(projective_cover(s, Rational(1, 2), 2).dim() == 12u);
    CHECK(projective_cover(s, Rational(0), 2).dim() == 24u);
}

TEST_CASE("BGG reciprocity at ell = 8, m = 1") {
    Session s = Session::make(8);
    const std::vector<Rational> window = bgg_window(s, {Rational(1, 2), Rational(5, 2)});
    CHECK(window.size() == 12u);
    BggTable t = bgg_table(s, 1, window);
    CHECK_MESSAGE(t.report.pass(), t.report.to_text());
    CHECK(cell(t, 0, 0).filtration == 1);
    CHECK(cell(t, 0, 6).filtration == 1);
    CHECK(cell(t, 0, 6).jh == 1);
    int nonzero = 0;
    for (const auto& c : t.cells)
        if (c.lambda == 0) nonzero += c.filtration;
    CHECK(nonzero == 2);
    CHECK(cell(t, Rational(1, 2), Rational(1, 2)).filtration == 1);
    CHECK(cell(t, Rational(1, 2), Rational(5, 2)).filtration == 0);
}

TEST_CASE("JH column agrees with a direct count") {
    Session s = Session::make(5);
    const std::vector<Rational> window = bgg_window(s, {Rational(3, 2), Rational(4)});
    BggTable t = bgg_table(s, 0, window);
    CHECK(t.report.pass());
    for (const auto& c : t.cells) CHECK(c.jh == multiplicity(jordan_holder(build_generalized_verma(s, c.mu, 0)), c.lambda));
}
