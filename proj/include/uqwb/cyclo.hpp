#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace uqwb {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

/// The cyclotomic field Q(zeta_M), presented as Q[x] / Phi_M(x).
///
/// Fields are interned: `get(M)` always returns the same object for the same
/// order, and the object lives for the whole program. Lookups are synchronized.
class CycloField {
public:
    static const CycloField& get(int order);

    int order() const { return order_; }
    /// phi(M), the degree of the field over Q.
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    /// Coefficients of Phi_M, lowest degree first (monic).
    const std::vector<long>& modulus() const { return modulus_; }
    /// reduced_power(e) for degree() <= e < 2*degree()-1: x^e mod Phi_M.
    const std::vector<long>& reduced_power(int e) const { return reduction_[e - degree()]; }

private:
    explicit CycloField(int order);

    int order_;
    std::vector<long> modulus_;
    std::vector<std::vector<long>> reduction_;
};

/// Coefficients of the n-th cyclotomic polynomial (lowest degree first).
std::vector<long> cyclotomic_polynomial(int n);

/// Element of Q(zeta_M) in the power basis, reduced modulo Phi_M.
///
/// Trailing zero coefficients are trimmed, so rational constants need no field
/// and zero is the empty coefficient vector. Any element of degree >= 1 carries
/// its field.
class CycloNum {
public:
    CycloNum() = default;
    CycloNum(long value);  // NOLINT(google-explicit-constructor)
    CycloNum(const Rational& value);  // NOLINT(google-explicit-constructor)
    CycloNum(const CycloField& field, std::vector<Rational> coeffs);

    /// zeta_M^e for any integer e.
    static CycloNum zeta_power(const CycloField& field, long e);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_rational() const { return c_.size() <= 1; }
    /// Number of stored power-basis terms; a cheap complexity measure for pivoting.
    std::size_t length() const { return c_.size(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const CycloField* field() const { return field_; }

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.c_ == b.c_; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    CycloNum inverse() const;
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

    /// Text form `(c0 + c1*z + c2*z^2)`; a rational constant prints as `(c0)`.
    std::string to_string() const;
    /// Parses the text form; `field` supplies zeta_M.
    static CycloNum parse(const CycloField& field, std::string_view text);

private:
    void trim();
    void adopt_field(const CycloField* f);

    const CycloField* field_ = nullptr;
    std::vector<Rational> c_;
};

}  // namespace uqwb
