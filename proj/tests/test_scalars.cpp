#include "doctest.h"
#include "support.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/session.hpp"

using namespace uqwb;
using testing::evaluate;
using testing::near;
using testing::root_of_unity;

TEST_CASE("cyclotomic arithmetic reduces modulo Phi_M") {
    const auto& f = CycloField::get(16);
    CHECK(f.degree() == 8);
    CycloNum z = CycloNum::zeta_power(f, 1);
    CHECK(CycloNum::zeta_power(f, 16).is_one());
    CHECK(CycloNum::zeta_power(f, 8) == CycloNum(-1));
    CHECK(z * CycloNum::zeta_power(f, -1) == CycloNum(1));
    CycloNum x = z + CycloNum(Rational(1, 3)) * CycloNum::zeta_power(f, 5);
    CHECK((x * x.inverse()).is_one());
    CHECK(near(evaluate(x, 16), root_of_unity(1.0L / 16) + root_of_unity(5.0L / 16) / 3.0L));
    CHECK_THROWS_AS(CycloNum(0).inverse(), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(20) == std::vector<long>{1, 0, -1, 0, 1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(16) == std::vector<long>{1, 0, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("q powers match exp(2 pi i w / ell)") {
    for (int ell : {3, 5, 8}) {
        Session s = Session::make(ell);
        for (int num = -9; num <= 9; ++num) {
            Rational w(num, 2);
            w.canonicalize();
            CHECK(near(evaluate(s.q_power(w), s.cyclo_order()), root_of_unity(static_cast<long double>(num) / (2.0L * ell))));
        }
    }
    Session s5 = Session::make(5);
    CHECK(s5.q_power(0L).is_one());
    CHECK(s5.q_power(Rational(5, 2)) == CycloNum(-1));
    CHECK_THROWS_AS(s5.q_power(Rational(1, 3)), InvalidInput);
}

TEST_CASE("quantum integers") {
    for (int ell : {5, 8}) {
        Session s = Session::make(ell);
        const auto q = [&](long double n) { return root_of_unity(n / ell); };
        CHECK(s.quantum_integer(1).is_one());
        CHECK(s.quantum_integer(s.r()).is_zero());
        for (long n = -6; n <= 12; ++n) {
            const testing::cplx want = (q(n) - q(-n)) / (q(1) - q(-1));
            CHECK(near(evaluate(s.quantum_integer(n), s.cyclo_order()), want, 1e-10L));
        }
    }
    Session s8 = Session::make(8);
    CHECK(s8.quantum_integer(2) == s8.q_power(1L) + s8.q_power(-1L));
}

TEST_CASE("degree drop coefficients") {
    Session e = Session::make(8);
    Session p = Session::make(8, 2, CoeffMode::PaperLiteral);
    CHECK(e.degree_drop_coeff(0).is_one());
    CHECK(e.degree_drop_coeff(1) == Scalar::tau_power(1));
    CHECK(p.degree_drop_coeff(1) == Scalar::tau_power(1));
    CHECK(e.degree_drop_coeff(3) == Scalar::tau_power(3, CycloNum(Rational(1, 6))));
    CHECK(p.degree_drop_coeff(3) == Scalar::tau_power(3));
}

TEST_CASE("scalar fractions normalize") {
    Session s = Session::make(8);
    Scalar t = Scalar::tau_power(1);
    Scalar a = (t * t - Scalar(1)) / (t - Scalar(1));
    CHECK(a == t + Scalar(1));
    CHECK(a.is_polynomial());
    Scalar b = Scalar(1) / (t - Scalar(1));
    CHECK_FALSE(b.is_polynomial());
    CHECK((b * (t - Scalar(1))).is_one());
    CHECK((t * t * t).derivative() == Scalar(3) * t * t);
}

TEST_CASE("specialization") {
    Session s = Session::make(8);
    Scalar t = Scalar::tau_power(1);
    CHECK((t * t + Scalar(1)).specialize(2) == CycloNum(5));
    CHECK_THROWS_AS((Scalar(1) / (t - Scalar(1))).specialize(1), PoleError);
    Scalar two(s.quantum_integer(2));
    CHECK((two * t).specialize(3) == CycloNum(3) * s.quantum_integer(2));
}

TEST_CASE("scalar text grammar round trips") {
    Session s = Session::make(5);
    const auto& f = s.field();
    Scalar x = Scalar::parse(f, "(1/2 + z^3)*t^0 + (-1)*t^2");
    CHECK(x.num().size() == 3);
    CHECK(x.num()[2] == CycloNum(-1));
    CHECK(x.num()[0] == CycloNum(Rational(1, 2)) + CycloNum::zeta_power(f, 3));
    CHECK(Scalar::parse(f, x.to_string()) == x);
    CHECK(Scalar(0).to_string() == "0");
    CHECK(Scalar::parse(f, "0").is_zero());
    Scalar y = x / (Scalar::tau_power(1) + Scalar(s.q_power(Rational(1, 2))));
    CHECK(Scalar::parse(f, y.to_string()) == y);
    CHECK(Scalar::parse(f, y.to_string()).to_string() == y.to_string());
    CHECK_THROWS_AS(Scalar::parse(f, "(1 + )*t^0"), InvalidInput);
}

TEST_CASE("sessions validate their parameters") {
    CHECK_THROWS_AS(Session::make(1), InvalidInput);
    CHECK(Session::make(5).r() == 5);
    CHECK(Session::make(8).r() == 4);
    CHECK(Session::make(8).cyclo_order() == 32);
    CHECK(parse_coeff_mode("paper-literal") == CoeffMode::PaperLiteral);
    CHECK_THROWS_AS(parse_coeff_mode("fast"), InvalidInput);
    Session s = Session::make(8);
    CHECK(s.weight_allowed(Rational(1, 2)));
    CHECK_FALSE(s.weight_allowed(Rational(1, 3)));
}
