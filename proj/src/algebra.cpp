#include "uqwb/algebra.hpp"

#include <optional>
#include <sstream>

#include "uqwb/errors.hpp"
#include "uqwb/repmod.hpp"

namespace uqwb {

std::string to_string(Gen g) {
    switch (g) {
        case Gen::E: return "E";
        case Gen::F: return "F";
        case Gen::K: return "K";
        case Gen::Kinv: return "Kinv";
        case Gen::H: return "H";
    }
    return "?";
}

Word parse_word(std::string_view text) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "E") w.push_back(Gen::E);
        else if (tok == "F") w.push_back(Gen::F);
        else if (tok == "K") w.push_back(Gen::K);
        else if (tok == "Kinv" || tok == "K^-1") w.push_back(Gen::Kinv);
        else if (tok == "H") w.push_back(Gen::H);
        else if (tok == "1") continue;
        else throw InvalidInput("unknown generator '" + tok + "' in word");
    }
    return w;
}

AlgebraElement AlgebraElement::one() { return word({}); }

AlgebraElement AlgebraElement::generator(Gen g) { return word({g}); }

AlgebraElement AlgebraElement::word(Word w, Scalar c) {
    AlgebraElement x;
    x.add_term(w, c);
    return x;
}

void AlgebraElement::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    normal_ = normal_ && o.normal_;
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    normal_ = normal_ && o.normal_;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
    AlgebraElement out;
    for (const auto& [w, x] : a.terms_) out.add_term(w, c * x);
    out.normal_ = a.normal_;
    return out;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "[" << c.to_string() << "]";
        if (w.empty()) out << "*1";
        for (Gen g : w) out << "*" << uqwb::to_string(g);
    }
    return out.str();
}

Word PbwMonomial::to_word() const {
    Word w;
    w.insert(w.end(), a, Gen::F);
    w.insert(w.end(), b, Gen::E);
    if (c > 0) w.insert(w.end(), c, Gen::K);
    if (c < 0) w.insert(w.end(), -c, Gen::Kinv);
    w.insert(w.end(), d, Gen::H);
    return w;
}

namespace {

using MonoMap = std::map<PbwMonomial, Scalar>;

void accumulate(MonoMap& m, const PbwMonomial& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

long binomial(int n, int k) {
    long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// Adds c * F^a E^b K^c' (H + shift)^d to out.
void add_shifted(MonoMap& out, int a, int b, int c, int d, int shift, const Scalar& coef) {
    long p = 1;
    for (int e = d; e >= 0; --e) {
        accumulate(out, {a, b, c, e}, coef * Scalar(binomial(d, e) * p));
        p *= shift;
    }
}

MonoMap right_multiply(const Session& s, const MonoMap& in, Gen g) {
    MonoMap out;
    const int r = s.r();
    for (const auto& [mono, coef] : in) {
        auto [a, b, c, d] = mono;
        switch (g) {
            case Gen::H: accumulate(out, {a, b, c, d + 1}, coef); break;
            case Gen::K: accumulate(out, {a, b, c + 1, d}, coef); break;
            case Gen::Kinv: accumulate(out, {a, b, c - 1, d}, coef); break;
            case Gen::E:
                // K^c H^d E = q^{2c} E K^c (H+2)^d
                if (b + 1 < r) add_shifted(out, a, b + 1, c, d, 2, coef * Scalar(s.q_power(2L * c)));
                break;
            case Gen::F: {
                // K^c H^d F = q^{-2c} F K^c (H-2)^d, then E^b F = F E^b + E^{b-1} sum_u (q^{2u}K - q^{-2u}K^-1)/(q-q^-1)
                Scalar base = coef * Scalar(s.q_power(-2L * c));
                if (a + 1 < r) add_shifted(out, a + 1, b, c, d, -2, base);
                if (b > 0) {
                    CycloNum plus, minus;
                    for (int u = 0; u < b; ++u) {
                        plus += s.q_power(2L * u);
                        minus += s.q_power(-2L * u);
                    }
                    add_shifted(out, a, b - 1, c + 1, d, -2, base * Scalar(plus * s.inv_q_diff()));
                    add_shifted(out, a, b - 1, c - 1, d, -2, base * Scalar(-(minus * s.inv_q_diff())));
                }
                break;
            }
        }
    }
    return out;
}

}  // namespace

std::map<PbwMonomial, Scalar> pbw_coefficients(const Session& s, const AlgebraElement& x) {
    MonoMap total;
    for (const auto& [w, c] : x.terms()) {
        MonoMap cur;
        cur.emplace(PbwMonomial{}, c);
        for (Gen g : w) {
            cur = right_multiply(s, cur, g);
            if (cur.empty()) break;
        }
        for (const auto& [mono, coef] : cur) accumulate(total, mono, coef);
    }
    return total;
}

AlgebraElement pbw_normal_form(const Session& s, const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [mono, coef] : pbw_coefficients(s, x)) out.add_term(mono.to_word(), coef);
    out.normal_ = true;
    return out;
}

AlgebraElement omega_map(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [w, c] : x.terms()) {
        Word img;
        Scalar sign(1);
        for (Gen g : w) {
            switch (g) {
                case Gen::E: img.push_back(Gen::F); break;
                case Gen::F: img.push_back(Gen::E); break;
                case Gen::K: img.push_back(Gen::Kinv); break;
                case Gen::Kinv: img.push_back(Gen::K); break;
                case Gen::H:
                    img.push_back(Gen::H);
                    sign = -sign;
                    break;
            }
        }
        out.add_term(img, sign * c);
    }
    return out;
}

AlgebraElement antipode_map(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [w, c] : x.terms()) {
        Word img;
        Scalar sign(1);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            switch (*it) {
                case Gen::E:
                    img.push_back(Gen::E);
                    img.push_back(Gen::Kinv);
                    sign = -sign;
                    break;
                case Gen::F:
                    img.push_back(Gen::K);
                    img.push_back(Gen::F);
                    sign = -sign;
                    break;
                case Gen::K: img.push_back(Gen::Kinv); break;
                case Gen::Kinv: img.push_back(Gen::K); break;
                case Gen::H:
                    img.push_back(Gen::H);
                    sign = -sign;
                    break;
            }
        }
        out.add_term(img, sign * c);
    }
    return out;
}

std::vector<std::pair<AlgebraElement, AlgebraElement>> coproduct_expand(Gen g) {
    using A = AlgebraElement;
    switch (g) {
        case Gen::E: return {{A::one(), A::generator(Gen::E)}, {A::generator(Gen::E), A::generator(Gen::K)}};
        case Gen::F: return {{A::generator(Gen::Kinv), A::generator(Gen::F)}, {A::generator(Gen::F), A::one()}};
        case Gen::K: return {{A::generator(Gen::K), A::generator(Gen::K)}};
        case Gen::Kinv: return {{A::generator(Gen::Kinv), A::generator(Gen::Kinv)}};
        case Gen::H: return {{A::one(), A::generator(Gen::H)}, {A::generator(Gen::H), A::one()}};
    }
    return {};
}

Scalar counit(const AlgebraElement& x) {
    Scalar total;
    for (const auto& [w, c] : x.terms()) {
        bool killed = false;
        for (Gen g : w)
            if (g == Gen::E || g == Gen::F || g == Gen::H) killed = true;
        if (!killed) total += c;
    }
    return total;
}

SparseMatrix act(const AlgebraElement& x, const ModuleRep& m) {
    std::optional<KPair> k;
    auto gen_matrix = [&](Gen g) -> const SparseMatrix& {
        switch (g) {
            case Gen::E: return m.E;
            case Gen::F: return m.F;
            case Gen::H: return m.H;
            default:
                if (!k) k = derive_K(m);
                return g == Gen::K ? k->K : k->Kinv;
        }
    };
    SparseMatrix total(m.dim(), m.dim());
    for (const auto& [w, c] : x.terms()) {
        SparseMatrix prod = SparseMatrix::identity(m.dim());
        for (Gen g : w) {
            prod = prod * gen_matrix(g);
            if (prod.is_zero()) break;
        }
        total += c * prod;
    }
    return total;
}

}  // namespace uqwb
