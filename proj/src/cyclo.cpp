#include "uqwb/cyclo.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "uqwb/dense.hpp"
#include "uqwb/errors.hpp"

namespace uqwb {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw InvalidInput("empty rational");
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw InvalidInput("malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::vector<long> cyclotomic_polynomial(int n) {
    if (n < 1) throw InvalidInput("cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = cyclotomic_polynomial(d);
        // exact division of p by the monic q
        std::vector<long> quot(p.size() - q.size() + 1, 0);
        for (int k = static_cast<int>(p.size()) - 1; k >= static_cast<int>(q.size()) - 1; --k) {
            long c = p[k];
            int shift = k - static_cast<int>(q.size()) + 1;
            quot[shift] = c;
            for (std::size_t t = 0; t < q.size(); ++t) p[shift + t] -= c * q[t];
        }
        p = std::move(quot);
    }
    return p;
}

CycloField::CycloField(int order) : order_(order), modulus_(cyclotomic_polynomial(order)) {
    const int phi = degree();
    // x^phi = -(modulus - x^phi); higher powers by repeated shifting.
    std::vector<long> cur(phi);
    for (int k = 0; k < phi; ++k) cur[k] = -modulus_[k];
    for (int e = phi; e < 2 * phi - 1 || e == phi; ++e) {
        reduction_.push_back(cur);
        long top = cur[phi - 1];
        std::vector<long> next(phi, 0);
        for (int k = phi - 1; k > 0; --k) next[k] = cur[k - 1];
        for (int k = 0; k < phi; ++k) next[k] -= top * modulus_[k];
        cur = std::move(next);
    }
}

const CycloField& CycloField::get(int order) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CycloField>> registry;
    if (order < 1) throw InvalidInput("cyclotomic order must be positive");
    std::lock_guard lock(mutex);
    auto& slot = registry[order];
    if (!slot) slot.reset(new CycloField(order));
    return *slot;
}

CycloNum::CycloNum(long value) {
    if (value != 0) c_.emplace_back(value);
}

CycloNum::CycloNum(const Rational& value) {
    if (sgn(value) != 0) c_.push_back(value);
}

CycloNum::CycloNum(const CycloField& field, std::vector<Rational> coeffs) : field_(&field), c_(std::move(coeffs)) {
    const int phi = field.degree();
    if (static_cast<int>(c_.size()) > phi) {
        // reduce high powers one at a time from the top
        for (int e = static_cast<int>(c_.size()) - 1; e >= phi; --e) {
            if (sgn(c_[e]) == 0) continue;
            Rational c = c_[e];
            c_[e] = 0;
            const auto& red = field.reduced_power(phi);
            for (int k = 0; k < phi; ++k)
                if (red[k] != 0) c_[e - phi + k] += c * red[k];
        }
        c_.resize(phi);
    }
    trim();
}

CycloNum CycloNum::zeta_power(const CycloField& field, long e) {
    long m = field.order();
    e %= m;
    if (e < 0) e += m;
    std::vector<Rational> c(e + 1, Rational(0));
    c[e] = 1;
    return CycloNum(field, std::move(c));
}

bool CycloNum::is_one() const { return c_.size() == 1 && c_[0] == 1; }

void CycloNum::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    if (c_.size() <= 1 && field_ == nullptr) return;
}

void CycloNum::adopt_field(const CycloField* f) {
    if (f == nullptr) return;
    if (field_ != nullptr && field_ != f) throw std::logic_error("mixing elements of different cyclotomic fields");
    field_ = f;
}

CycloNum CycloNum::operator-() const {
    CycloNum r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    adopt_field(o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
    trim();
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    adopt_field(o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
    trim();
    return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    CycloNum r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.field_ = a.field_ != nullptr ? a.field_ : b.field_;
    if (a.field_ != nullptr && b.field_ != nullptr && a.field_ != b.field_)
        throw std::logic_error("mixing elements of different cyclotomic fields");
    if (a.c_.size() == 1 || b.c_.size() == 1) {
        const auto& s = a.c_.size() == 1 ? a.c_[0] : b.c_[0];
        const auto& v = a.c_.size() == 1 ? b.c_ : a.c_;
        r.c_.resize(v.size());
        for (std::size_t k = 0; k < v.size(); ++k)
            if (sgn(v[k]) != 0) r.c_[k] = s * v[k];
        r.trim();
        return r;
    }
    std::vector<Rational> raw(a.c_.size() + b.c_.size() - 1);
    mpq_class tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            raw[i + j] += tmp;
        }
    }
    const CycloField& f = *r.field_;
    const int phi = f.degree();
    if (static_cast<int>(raw.size()) > phi) {
        for (int e = static_cast<int>(raw.size()) - 1; e >= phi; --e) {
            if (sgn(raw[e]) == 0) continue;
            const auto& red = f.reduced_power(e);
            for (int k = 0; k < phi; ++k)
                if (red[k] != 0) raw[k] += raw[e] * red[k];
        }
        raw.resize(phi);
    }
    r.c_ = std::move(raw);
    r.trim();
    return r;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

CycloNum CycloNum::inverse() const {
    if (c_.empty()) throw std::domain_error("inverse of zero cyclotomic number");
    if (c_.size() == 1) return CycloNum(Rational(1 / c_[0]));
    const CycloField& f = *field_;
    const int phi = f.degree();
    // Column k of the multiplication-by-this matrix is this * x^k.
    DenseMatrix<Rational> mult(phi, phi);
    for (int k = 0; k < phi; ++k) {
        std::vector<Rational> xk(k + 1, Rational(0));
        xk[k] = 1;
        CycloNum col = *this * CycloNum(f, std::move(xk));
        for (int i = 0; i < phi; ++i) mult(i, k) = col.coeff(i);
    }
    std::vector<Rational> rhs(phi, Rational(0));
    rhs[0] = 1;
    auto sol = solve(mult, rhs);
    if (!sol) throw std::logic_error("cyclotomic inverse: singular multiplication matrix");
    return CycloNum(f, std::move(*sol));
}

std::string CycloNum::to_string() const {
    if (c_.empty()) return "(0)";
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        Rational c = c_[k];
        bool neg = sgn(c) < 0;
        if (!first) out << (neg ? " - " : " + ");
        else if (neg) out << '-';
        Rational a = neg ? Rational(-c) : c;
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << '*';
            out << 'z';
            if (k > 1) out << '^' << k;
        }
        first = false;
    }
    out << ')';
    return out.str();
}

namespace {

std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

CycloNum CycloNum::parse(const CycloField& field, std::string_view text) {
    std::string s = strip(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw InvalidInput("cyclotomic literal must be parenthesized: '" + s + "'");
    s = s.substr(1, s.size() - 2);
    // Split into signed terms at top-level '+' / '-' (a '-' right after '/' or '^' is not a separator).
    std::vector<std::pair<bool, std::string>> terms;
    std::string cur;
    bool neg = false;
    for (char ch : s) {
        if (ch == '+' || ch == '-') {
            std::string t = strip(cur);
            char prev = t.empty() ? '\0' : t.back();
            if (prev != '^' && prev != '/' && prev != '*') {
                if (!t.empty()) {
                    terms.emplace_back(neg, t);
                    neg = ch == '-';
                } else if (ch == '-') {
                    neg = !neg;
                }
                cur.clear();
                continue;
            }
        }
        cur += ch;
    }
    if (strip(cur).empty()) throw InvalidInput("dangling sign or empty literal in '" + strip(text) + "'");
    terms.emplace_back(neg, strip(cur));
    std::vector<Rational> coeffs;
    for (auto& [negative, term] : terms) {
        Rational c = 1;
        long power = 0;
        auto zpos = term.find('z');
        if (zpos == std::string::npos) {
            c = parse_rational(term);
        } else {
            std::string pre = strip(term.substr(0, zpos));
            if (!pre.empty()) {
                if (pre.back() != '*') throw InvalidInput("expected '*' before z in '" + term + "'");
                pre.pop_back();
                c = parse_rational(pre);
            }
            std::string post = strip(term.substr(zpos + 1));
            if (!post.empty()) {
                if (post.front() != '^') throw InvalidInput("expected '^' after z in '" + term + "'");
                std::size_t used = 0;
                const std::string digits = strip(post.substr(1));
                try {
                    power = std::stol(digits, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != digits.size()) throw InvalidInput("bad exponent in '" + term + "'");
            } else {
                power = 1;
            }
        }
        if (negative) c = -c;
        long m = field.order();
        power %= m;
        if (power < 0) power += m;
        if (static_cast<long>(coeffs.size()) <= power) coeffs.resize(power + 1);
        coeffs[power] += c;
    }
    return CycloNum(field, std::move(coeffs));
}

}  // namespace uqwb
