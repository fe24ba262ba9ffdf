#include "doctest.h"
#include "support.hpp"
#include "uqwb/composition.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/suite.hpp"

using namespace uqwb;

TEST_CASE("suite bounds") {
    Session s3 = Session::make(3);
    SuiteBounds b = default_bounds(s3);
    CHECK(b.max_i == 1);
    CHECK_NOTHROW(validate_bounds(s3, b));
    b.max_i = 2;
    CHECK_THROWS_AS(validate_bounds(s3, b), InvalidInput);
    Session s40 = Session::make(40);
    SuiteBounds big = default_bounds(s40);
    CHECK_THROWS_AS(validate_bounds(s40, big), InvalidInput);
    Session s8 = Session::make(8);
    SuiteBounds small{2, 1};
    CHECK(predicted_top_dimension(s8, small) == 32u);
}

TEST_CASE("sample typical weights") {
    CHECK(sample_typical_weights(Session::make(8)) == std::vector<Rational>{Rational(1, 2), Rational(5, 2)});
    CHECK(sample_typical_weights(Session::make(5)) == std::vector<Rational>{Rational(3, 2), Rational(4)});
    for (int ell : {3, 4, 6, 7}) {
        Session s = Session::make(ell);
        auto w = sample_typical_weights(s);
        REQUIRE(w.size() == 2u);
        CHECK(w[0] != w[1]);
        for (const auto& x : w) CHECK(is_typical(s, x));
    }
}

TEST_CASE("small suite run") {
    Session s = Session::make(3);
    SuiteBounds b{1, 1};
    Report r = run_suite(s, b);
    CHECK_MESSAGE(r.pass(), r.to_text());
    CHECK(r.items.size() > 100u);
}
