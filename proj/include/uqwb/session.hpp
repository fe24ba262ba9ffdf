#pragma once

#include <string>

#include "uqwb/cyclo.hpp"
#include "uqwb/scalar.hpp"

namespace uqwb {

enum class CoeffMode { Exponential, PaperLiteral };

std::string to_string(CoeffMode mode);
CoeffMode parse_coeff_mode(const std::string& text);

/// Root-of-unity data shared by every object of a run.
///
/// q = exp(2 pi i / ell) is represented as zeta_M^(2N) with M = 2 N ell, so
/// q^w is exact for every weight w in (1/N)Z. tau stands for log q.
class Session {
public:
    static Session make(int ell, int weight_denominator = 2, CoeffMode mode = CoeffMode::Exponential);

    int ell() const { return ell_; }
    int r() const { return r_; }
    int weight_denominator() const { return n_; }
    int cyclo_order() const { return 2 * n_ * ell_; }
    CoeffMode mode() const { return mode_; }
    const CycloField& field() const { return *field_; }

    bool weight_allowed(const Rational& w) const;
    /// Throws InvalidInput unless w lies in (1/N)Z.
    void require_weight(const Rational& w) const;

    /// q^w for w in (1/N)Z.
    CycloNum q_power(const Rational& w) const;
    CycloNum q_power(long e) const { return q_power(Rational(e)); }
    /// [n] = (q^n - q^-n) / (q - q^-1).
    CycloNum quantum_integer(long n) const;
    /// 1 / (q - q^-1).
    const CycloNum& inv_q_diff() const { return inv_q_diff_; }
    /// ell / 2, the weight step of the one-dimensional modules.
    Rational half_ell() const;

    /// Coefficient of (H - w)^s in K = q^w * sum_s c_s (H - w)^s.
    Scalar degree_drop_coeff(int s) const;

    friend bool operator==(const Session& a, const Session& b) {
        return a.ell_ == b.ell_ && a.n_ == b.n_ && a.mode_ == b.mode_;
    }

private:
    int ell_ = 0;
    int r_ = 0;
    int n_ = 0;
    CoeffMode mode_ = CoeffMode::Exponential;
    const CycloField* field_ = nullptr;
    CycloNum inv_q_diff_;
};

}  // namespace uqwb
