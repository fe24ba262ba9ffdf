#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uqwb/module.hpp"
#include "uqwb/scalar.hpp"
#include "uqwb/session.hpp"
#include "uqwb/sparse.hpp"

namespace uqwb {

enum class Gen { E, F, K, Kinv, H };

using Word = std::vector<Gen>;

std::string to_string(Gen g);
/// Whitespace-separated generator names (E F K Kinv H; K^-1 also accepted).
Word parse_word(std::string_view text);

/// Finite linear combination of words. Words multiply by concatenation and,
/// acting on a module, the leftmost generator acts last.
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement one();
    static AlgebraElement generator(Gen g);
    static AlgebraElement word(Word w, Scalar c = Scalar(1));

    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Set on results of pbw_normal_form: every word is F^a E^b K^c H^d.
    bool normal() const { return normal_; }

    void add_term(const Word& w, const Scalar& c);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    friend AlgebraElement pbw_normal_form(const Session& s, const AlgebraElement& x);
    std::map<Word, Scalar> terms_;
    bool normal_ = false;
};

/// Exponents of the ordered monomial F^a E^b K^c H^d.
struct PbwMonomial {
    int a = 0, b = 0, c = 0, d = 0;
    auto operator<=>(const PbwMonomial&) const = default;
    Word to_word() const;
};

/// Unique expansion in the monomials F^a E^b K^c H^d with a, b < r.
AlgebraElement pbw_normal_form(const Session& s, const AlgebraElement& x);
/// The same expansion keyed by exponents.
std::map<PbwMonomial, Scalar> pbw_coefficients(const Session& s, const AlgebraElement& x);

AlgebraElement omega_map(const AlgebraElement& x);
AlgebraElement antipode_map(const AlgebraElement& x);
/// Sweedler terms of the coproduct of a generator.
std::vector<std::pair<AlgebraElement, AlgebraElement>> coproduct_expand(Gen g);
Scalar counit(const AlgebraElement& x);

/// The operator by which x acts on m.
SparseMatrix act(const AlgebraElement& x, const ModuleRep& m);

}  // namespace uqwb
