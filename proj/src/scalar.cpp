#include "uqwb/scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "uqwb/errors.hpp"

namespace uqwb {

namespace tau_poly {

void trim(TauPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const TauPoly& p) { return static_cast<int>(p.size()) - 1; }

TauPoly add(const TauPoly& a, const TauPoly& b) {
    TauPoly r(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (k < a.size()) r[k] += a[k];
        if (k < b.size()) r[k] += b[k];
    }
    trim(r);
    return r;
}

TauPoly sub(const TauPoly& a, const TauPoly& b) {
    TauPoly r(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (k < a.size()) r[k] += a[k];
        if (k < b.size()) r[k] -= b[k];
    }
    trim(r);
    return r;
}

TauPoly mul(const TauPoly& a, const TauPoly& b) {
    if (a.empty() || b.empty()) return {};
    TauPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

TauPoly scale(const TauPoly& a, const CycloNum& c) {
    if (c.is_zero()) return {};
    TauPoly r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero()) r[k] = a[k] * c;
    trim(r);
    return r;
}

void divmod(const TauPoly& a, const TauPoly& b, TauPoly& q, TauPoly& r) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, CycloNum());
    CycloNum lead_inv = b.back().inverse();
    while (r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        CycloNum c = r.back() * lead_inv;
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k)
            if (!b[k].is_zero()) r[shift + k] -= c * b[k];
        r.pop_back();
        trim(r);
    }
    trim(q);
}

TauPoly make_monic(const TauPoly& p) {
    if (p.empty() || p.back().is_one()) return p;
    return scale(p, p.back().inverse());
}

TauPoly gcd(TauPoly a, TauPoly b) {
    while (!b.empty()) {
        TauPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

CycloNum eval(const TauPoly& p, const CycloNum& t) {
    CycloNum acc;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * t + p[k];
    return acc;
}

TauPoly derivative(const TauPoly& p) {
    if (p.size() <= 1) return {};
    TauPoly r(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * CycloNum(static_cast<long>(k));
    trim(r);
    return r;
}

}  // namespace tau_poly

namespace tp = tau_poly;

Scalar::Scalar(long v) {
    if (v != 0) num_.emplace_back(v);
}

Scalar::Scalar(const Rational& v) {
    if (sgn(v) != 0) num_.emplace_back(v);
}

Scalar::Scalar(const CycloNum& v) {
    if (!v.is_zero()) num_.push_back(v);
}

Scalar Scalar::from_poly(TauPoly num) {
    Scalar s;
    s.num_ = std::move(num);
    tp::trim(s.num_);
    return s;
}

Scalar Scalar::from_fraction(TauPoly num, TauPoly den) {
    tp::trim(den);
    if (den.empty()) throw std::domain_error("zero denominator");
    Scalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    tp::trim(s.num_);
    s.normalize();
    return s;
}

Scalar Scalar::tau_power(int k, const CycloNum& c) {
    Scalar s;
    if (c.is_zero()) return s;
    s.num_.assign(k + 1, CycloNum());
    s.num_[k] = c;
    return s;
}

CycloNum Scalar::constant_value() const {
    if (!is_constant()) throw std::logic_error("scalar depends on tau");
    return num_.empty() ? CycloNum() : num_[0];
}

TauPoly Scalar::den() const { return den_.empty() ? TauPoly{CycloNum(1)} : den_; }

std::size_t Scalar::length() const {
    std::size_t cost = 0;
    for (const auto& c : num_) cost += c.length();
    for (const auto& c : den_) cost += c.length();
    // tau-dependence dominates coefficient size
    cost += 64 * (num_.size() + den_.size() - (num_.empty() ? 0 : 1));
    return cost;
}

void Scalar::normalize() {
    if (num_.empty()) {
        den_.clear();
        return;
    }
    if (den_.empty()) return;
    if (den_.size() == 1) {
        num_ = tp::scale(num_, den_[0].inverse());
        den_.clear();
        return;
    }
    TauPoly g = tp::gcd(num_, den_);
    if (g.size() > 1) {
        TauPoly q, r;
        tp::divmod(num_, g, q, r);
        num_ = std::move(q);
        tp::divmod(den_, g, q, r);
        den_ = std::move(q);
    }
    CycloNum lead = den_.back();
    if (!lead.is_one()) {
        CycloNum inv = lead.inverse();
        num_ = tp::scale(num_, inv);
        den_ = tp::scale(den_, inv);
    }
    if (den_.size() == 1) den_.clear();
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    for (auto& c : s.num_) c = -c;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.num_.empty()) return *this;
    if (num_.empty()) return *this = o;
    if (den_.empty() && o.den_.empty()) {
        num_ = tp::add(num_, o.num_);
        return *this;
    }
    if (den_ == o.den_) {
        num_ = tp::add(num_, o.num_);
    } else {
        TauPoly d1 = den(), d2 = o.den();
        num_ = tp::add(tp::mul(num_, d2), tp::mul(o.num_, d1));
        den_ = tp::mul(d1, d2);
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar s;
    if (a.num_.empty() || b.num_.empty()) return s;
    if (a.den_.empty() && b.den_.empty()) {
        s.num_ = tp::mul(a.num_, b.num_);
        return s;
    }
    s.num_ = tp::mul(a.num_, b.num_);
    s.den_ = tp::mul(a.den(), b.den());
    s.normalize();
    return s;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::inverse() const {
    if (num_.empty()) throw std::domain_error("inverse of zero scalar");
    Scalar s;
    s.num_ = den();
    s.den_ = num_;
    s.normalize();
    return s;
}

Scalar Scalar::derivative() const {
    if (den_.empty()) return from_poly(tp::derivative(num_));
    TauPoly n = tp::sub(tp::mul(tp::derivative(num_), den_), tp::mul(num_, tp::derivative(den_)));
    return from_fraction(std::move(n), tp::mul(den_, den_));
}

CycloNum Scalar::specialize(const Rational& t) const {
    CycloNum tv(t);
    CycloNum d = den_.empty() ? CycloNum(1) : tp::eval(den_, tv);
    if (d.is_zero()) throw PoleError("denominator vanishes at tau = " + t.get_str());
    CycloNum n = tp::eval(num_, tv);
    return d.is_one() ? n : n / d;
}

namespace {

std::string poly_to_string(const TauPoly& p) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        if (!first) out << " + ";
        out << p[k].to_string() << "*t^" << k;
        first = false;
    }
    return first ? "0" : out.str();
}

TauPoly parse_poly(const CycloField& field, std::string_view text) {
    TauPoly p;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (text.substr(i) == "0") return p;
    while (i < text.size()) {
        skip();
        if (text[i] != '(') throw InvalidInput("expected '(' in scalar term: '" + std::string(text) + "'");
        int depth = 0;
        std::size_t start = i;
        for (; i < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')' && --depth == 0) break;
        }
        if (i >= text.size()) throw InvalidInput("unbalanced parentheses in scalar");
        CycloNum c = CycloNum::parse(field, text.substr(start, i - start + 1));
        ++i;
        skip();
        long k = 0;
        if (text.substr(i, 4) == "*t^0" || text.substr(i, 3) == "*t^") {
            i += 3;
            std::size_t s = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            k = std::stol(std::string(text.substr(s, i - s)));
        } else if (text.substr(i, 2) == "*t") {
            i += 2;
            k = 1;
        }
        if (static_cast<long>(p.size()) <= k) p.resize(k + 1);
        p[k] += c;
        skip();
        if (i < text.size()) {
            if (text[i] != '+') throw InvalidInput("expected '+' between scalar terms");
            ++i;
        }
    }
    tp::trim(p);
    return p;
}

}  // namespace

std::string Scalar::to_string() const {
    if (num_.empty()) return "0";
    if (den_.empty()) return poly_to_string(num_);
    return poly_to_string(num_) + " / " + poly_to_string(den_);
}

Scalar Scalar::parse(const CycloField& field, std::string_view text) {
    int depth = 0;
    std::size_t slash = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        else if (text[i] == ')') --depth;
        else if (text[i] == '/' && depth == 0) slash = i;
    }
    if (slash == std::string_view::npos) return from_poly(parse_poly(field, text));
    TauPoly den = parse_poly(field, text.substr(slash + 1));
    if (den.empty()) throw InvalidInput("zero denominator in scalar literal");
    return from_fraction(parse_poly(field, text.substr(0, slash)), std::move(den));
}

}  // namespace uqwb
