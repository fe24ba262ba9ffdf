#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "uqwb/cyclo.hpp"

namespace uqwb {

/// Polynomial in the transcendental tau with cyclotomic coefficients,
/// lowest degree first, trimmed.
using TauPoly = std::vector<CycloNum>;

namespace tau_poly {
void trim(TauPoly& p);
int degree(const TauPoly& p);  // -1 for zero
TauPoly add(const TauPoly& a, const TauPoly& b);
TauPoly sub(const TauPoly& a, const TauPoly& b);
TauPoly mul(const TauPoly& a, const TauPoly& b);
TauPoly scale(const TauPoly& a, const CycloNum& c);
/// Euclidean division by a nonzero divisor: a = q*b + r.
void divmod(const TauPoly& a, const TauPoly& b, TauPoly& q, TauPoly& r);
/// Monic gcd (zero if both are zero).
TauPoly gcd(TauPoly a, TauPoly b);
TauPoly make_monic(const TauPoly& p);
CycloNum eval(const TauPoly& p, const CycloNum& t);
TauPoly derivative(const TauPoly& p);
}  // namespace tau_poly

/// Element of Q(zeta_M)(tau): num/den with gcd 1 and monic denominator.
///
/// A denominator equal to 1 is stored as an empty polynomial so the common
/// polynomial case skips all gcd work.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v);  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& v);  // NOLINT(google-explicit-constructor)
    Scalar(const CycloNum& v);  // NOLINT(google-explicit-constructor)
    static Scalar from_poly(TauPoly num);
    static Scalar from_fraction(TauPoly num, TauPoly den);
    /// c * tau^k
    static Scalar tau_power(int k, const CycloNum& c = CycloNum(1));

    bool is_zero() const { return num_.empty(); }
    bool is_one() const { return den_.empty() && num_.size() == 1 && num_[0].is_one(); }
    bool is_polynomial() const { return den_.empty(); }
    /// True when the value does not involve tau.
    bool is_constant() const { return den_.empty() && num_.size() <= 1; }
    CycloNum constant_value() const;  // requires is_constant()

    const TauPoly& num() const { return num_; }
    TauPoly den() const;  // {1} when stored implicitly

    /// Pivot-selection cost: prefers constants, then short polynomials.
    std::size_t length() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    Scalar inverse() const;
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    /// d/dtau.
    Scalar derivative() const;
    /// Exact value at tau = t; throws PoleError when the denominator vanishes there.
    CycloNum specialize(const Rational& t) const;

    /// `poly` or `poly / poly`, poly = `(cyclo)*t^k + ...`; zero prints as `0`.
    std::string to_string() const;
    static Scalar parse(const CycloField& field, std::string_view text);

private:
    void normalize();

    TauPoly num_;
    TauPoly den_;
};

}  // namespace uqwb
