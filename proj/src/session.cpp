#include "uqwb/session.hpp"

#include "uqwb/errors.hpp"

namespace uqwb {

std::string to_string(CoeffMode mode) {
    return mode == CoeffMode::Exponential ? "exponential" : "paper-literal";
}

CoeffMode parse_coeff_mode(const std::string& text) {
    if (text == "exponential") return CoeffMode::Exponential;
    if (text == "paper-literal") return CoeffMode::PaperLiteral;
    throw InvalidInput("unknown coefficient mode '" + text + "'");
}

Session Session::make(int ell, int weight_denominator, CoeffMode mode) {
    if (ell < 1) throw InvalidInput("ell must be positive");
    if (weight_denominator < 1) throw InvalidInput("weight denominator must be positive");
    Session s;
    s.ell_ = ell;
    s.r_ = ell % 2 == 0 ? ell / 2 : ell;
    if (s.r_ < 2) throw InvalidInput("need r >= 2 (ord(q^2) > 1); ell = " + std::to_string(ell) + " gives r = " + std::to_string(s.r_));
    s.n_ = weight_denominator;
    s.mode_ = mode;
    s.field_ = &CycloField::get(s.cyclo_order());
    s.inv_q_diff_ = (s.q_power(1) - s.q_power(-1)).inverse();
    return s;
}

bool Session::weight_allowed(const Rational& w) const {
    Rational scaled = w * n_;
    return scaled.get_den() == 1;
}

void Session::require_weight(const Rational& w) const {
    if (!weight_allowed(w))
        throw InvalidInput("weight " + w.get_str() + " is not in (1/" + std::to_string(n_) + ")Z");
}

CycloNum Session::q_power(const Rational& w) const {
    require_weight(w);
    Rational e = w * (2 * n_);
    return CycloNum::zeta_power(*field_, e.get_num().get_si());
}

CycloNum Session::quantum_integer(long n) const {
    if (n < 0) return -quantum_integer(-n);
    CycloNum acc;
    for (long k = 0; k < n; ++k) acc += q_power(n - 1 - 2 * k);
    return acc;
}

Rational Session::half_ell() const {
    Rational h(ell_, 2);
    h.canonicalize();
    return h;
}

Scalar Session::degree_drop_coeff(int s) const {
    if (mode_ == CoeffMode::PaperLiteral) return Scalar::tau_power(s);
    mpz_class fact = 1;
    for (int k = 2; k <= s; ++k) fact *= k;
    return Scalar::tau_power(s, CycloNum(Rational(mpz_class(1), fact)));
}

}  // namespace uqwb
