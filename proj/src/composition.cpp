#include "uqwb/composition.hpp"

#include <algorithm>

#include "uqwb/errors.hpp"
#include "uqwb/repmod.hpp"

namespace uqwb {

namespace {

bool integral(const Rational& x) { return x.get_den() == 1; }

// [x] = 0 iff q^(2x) = 1
bool qint_vanishes(const Session& s, const Rational& x) { return s.q_power(Rational(2 * x)).is_one(); }

}  // namespace

TypicalityVerdict typicality(const Session& s, const Rational& lambda) {
    const Rational a = lambda + 1;
    TypicalityVerdict v;
    v.weight = lambda;
    const std::string as = a.get_str();
    if (s.ell() % 2 == 0) {
        if (!integral(a)) {
            v.typical = true;
            v.witness = "lambda+1 = " + as + " is not an integer";
        } else {
            v.typical = a.get_num() % s.r() == 0;
            v.witness = "lambda+1 = " + as + (v.typical ? " lies in " : " is an integer outside ") + std::to_string(s.r()) + "Z";
        }
    } else {
        const Rational twice = 2 * a;
        if (!integral(twice)) {
            v.typical = true;
            v.witness = "lambda+1 = " + as + " is not in Z/2";
        } else {
            v.typical = twice.get_num() % s.r() == 0;
            v.witness = "lambda+1 = " + as + (v.typical ? " lies in " : " is in Z/2 outside ") + "(" + std::to_string(s.r()) + "/2)Z";
        }
    }
    return v;
}

bool is_typical(const Session& s, const Rational& lambda) { return typicality(s, lambda).typical; }

std::string SimpleLabel::to_string() const {
    if (typical) return "M_" + highest.get_str();
    std::string out = "L_" + std::to_string(i);
    if (k != 0) out += " (x) C_" + Rational(highest - i).get_str();
    return out;
}

int simple_dimension(const Session& s, const Rational& w) {
    for (int t = 1; t < s.r(); ++t)
        if (qint_vanishes(s, Rational(w - t + 1))) return t;
    return s.r();
}

SimpleLabel identify_simple(const Session& s, const Rational& w, int d) {
    SimpleLabel lab;
    lab.highest = w;
    lab.dim = d;
    if (d == s.r() && is_typical(s, w)) {
        lab.typical = true;
        return lab;
    }
    Rational k = Rational(w - (d - 1)) / s.half_ell();
    k.canonicalize();
    if (d >= 1 && d <= s.r() && integral(k)) {
        lab.i = d - 1;
        lab.k = k.get_num().get_si();
        return lab;
    }
    throw ConstructionError("unidentified simple factor: highest weight " + w.get_str() + ", dimension " + std::to_string(d));
}

SocleData socle(const ModuleRep& m) {
    const BlockOps ops = block_ops(m);
    const Session& s = m.session;
    SocleData out{Subspace(ops.blocks), {}};
    std::vector<std::pair<int, Vec>> seeds;
    for (std::size_t b = 0; b < ops.blocks.count(); ++b) {
        const int bi = static_cast<int>(b);
        const std::size_t n = ops.dim(bi);
        const Rational& w = ops.blocks.weights[b];
        const int t = simple_dimension(s, w);
        DenseMatrix<Scalar> cons(0, n);
        auto append = [&](const DenseMatrix<Scalar>& a) {
            for (std::size_t i = 0; i < a.rows(); ++i) cons.append_row(a.row(i));
        };
        if (ops.up[b] >= 0) append(ops.E[b]);
        DenseMatrix<Scalar> h = ops.H[b];
        for (std::size_t k = 0; k < n; ++k) h(k, k) -= Scalar(w);
        append(h);
        DenseMatrix<Scalar> ft = DenseMatrix<Scalar>::identity(n);
        int cur = bi;
        bool vanishes = false;
        for (int step = 0; step < t; ++step) {
            if (ops.down[cur] < 0) {
                vanishes = true;
                break;
            }
            ft = ops.F[cur] * ft;
            cur = ops.down[cur];
        }
        if (!vanishes) append(ft);
        const auto basis = nullspace(cons);
        if (basis.empty()) continue;
        const SimpleLabel lab = identify_simple(s, w, t);
        for (const auto& v : basis) {
            out.factors.push_back(lab);
            seeds.emplace_back(bi, v);
        }
    }
    saturate(ops, out.socle, seeds);
    return out;
}

Subspace radical(const ModuleRep& m) {
    const ModuleRep d = build_dual(m);
    return annihilator(weight_blocks(m), socle(d).socle);
}

std::vector<SimpleLabel> top(const ModuleRep& m) {
    auto f = jordan_holder(quotient_module(m, radical(m)));
    return f;
}

std::vector<SimpleLabel> jordan_holder(const ModuleRep& m) {
    std::vector<SimpleLabel> out;
    ModuleRep q = m;
    while (q.dim() > 0) {
        SocleData sd = socle(q);
        if (sd.socle.dim() == 0) throw ConstructionError("empty socle in a nonzero module");
        out.insert(out.end(), sd.factors.begin(), sd.factors.end());
        q = quotient_module(q, sd.socle);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int multiplicity(const std::vector<SimpleLabel>& factors, const Rational& highest) {
    return static_cast<int>(std::count_if(factors.begin(), factors.end(), [&](const SimpleLabel& l) { return l.highest == highest; }));
}

std::string to_string(const std::vector<SimpleLabel>& factors) {
    std::string out = "{";
    for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? ", " : "") + factors[k].to_string();
    return out + "}";
}

}  // namespace uqwb
