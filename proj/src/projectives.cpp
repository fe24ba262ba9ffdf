#include "uqwb/projectives.hpp"

#include <regex>

#include "uqwb/composition.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/filtration.hpp"
#include "uqwb/relations.hpp"
#include "uqwb/repmod.hpp"
#include "uqwb/subspace.hpp"

namespace uqwb {

std::string to_string(ProjFamily f) {
    switch (f) {
        case ProjFamily::T: return "T";
        case ProjFamily::S: return "S";
        case ProjFamily::L: return "L";
        case ProjFamily::R: return "R";
    }
    return "?";
}

std::string to_string(const ProjSpec& p) {
    return "P_" + std::to_string(p.i) + "^" + std::to_string(p.m) + (p.twist ? " (x) C_{" + std::to_string(p.twist) + " ell/2}" : "");
}

namespace {

void check_spec(const Session& s, const ProjSpec& spec) {
    if (spec.i < 0 || spec.i > s.r() - 2)
        throw InvalidInput("projective index i = " + std::to_string(spec.i) + " outside 0.." + std::to_string(s.r() - 2));
    if (spec.m < 0) throw InvalidInput("degree must be non-negative");
}

// position of the label within its family (from the top weight), or -1
long family_step(const Session& s, const ProjSpec& spec, const ProjLabel& l) {
    const long i = spec.i, j = s.r() - 2 - spec.i, r = s.r();
    long k = -1, count = 0;
    switch (l.family) {
        case ProjFamily::T:
        case ProjFamily::S: k = (i - l.t) / 2, count = i + 1; break;
        case ProjFamily::L: k = (j - r - l.t) / 2, count = j + 1; break;
        case ProjFamily::R: k = (l.t - (r - j)) / 2, count = j + 1; break;
    }
    // R is listed from its lowest weight r-j upwards, matching E R_t = R_{t+2}
    return (k >= 0 && k < count) ? k : -1;
}

}  // namespace

std::size_t proj_index(const Session& s, const ProjSpec& spec, const ProjLabel& l) {
    const std::size_t chain = spec.m + 1;
    const std::size_t i = spec.i, j = s.r() - 2 - spec.i;
    const long k = family_step(s, spec, l);
    if (k < 0 || l.s < 0 || l.s > spec.m) throw InvalidInput("no basis vector " + to_string(l.family) + "_{" + std::to_string(l.t) + "," + std::to_string(l.s) + "}");
    std::size_t base = 0;
    if (l.family >= ProjFamily::S) base += (i + 1) * chain;
    if (l.family >= ProjFamily::L) base += (i + 1) * chain;
    if (l.family >= ProjFamily::R) base += (j + 1) * chain;
    return base + static_cast<std::size_t>(k) * chain + l.s;
}

ModuleRep build_projective_cover_unchecked(const Session& s, const ProjSpec& spec) {
    check_spec(s, spec);
    const long i = spec.i, r = s.r(), j = r - 2 - i;
    const int m = spec.m;
    const std::size_t n = 2 * static_cast<std::size_t>(m + 1) * r;
    ModuleRep p;
    p.session = s;
    p.max_degree = m;
    p.labels.resize(n);
    p.E = SparseMatrix(n, n);
    p.F = SparseMatrix(n, n);
    p.H = SparseMatrix(n, n);
    auto at = [&](ProjFamily f, long t, int sdeg) { return proj_index(s, spec, {f, t, sdeg}); };

    std::vector<Scalar> c(m + 1);
    for (int d = 0; d <= m; ++d) c[d] = s.degree_drop_coeff(d);
    const CycloNum inv = s.inv_q_diff();
    // degree-drop-n coefficient: [k][x] for even n, [k](q^x + q^-x)/(q - q^-1) for odd n
    auto coef = [&](long k, long x, int nd) {
        CycloNum a = nd % 2 == 0 ? s.quantum_integer(k) * s.quantum_integer(x)
                                 : s.quantum_integer(k) * (s.q_power(x) + s.q_power(-x)) * inv;
        return Scalar(a) * c[nd];
    };
    // sum_n coef(k, x, n) x_{target, s - n}, added to column `col`
    auto add_template = [&](SparseMatrix& mat, std::size_t col, ProjFamily f, long target, long k, long x, int sdeg, int sign) {
        for (int nd = 0; nd <= sdeg; ++nd) {
            Scalar v = coef(k, x, nd);
            if (v.is_zero()) continue;
            if (sign < 0) v = -v;
            mat.add_to(at(f, target, sdeg - nd), col, v);
        }
    };

    auto fill = [&](ProjFamily f, long t) {
        for (int sd = 0; sd <= m; ++sd) {
            const std::size_t idx = at(f, t, sd);
            p.labels[idx] = {Rational(t), sd, to_string(f) + "_{" + std::to_string(t) + "," + std::to_string(sd) + "}"};
            p.H.set(idx, idx, Scalar(t));
            if (sd > 0) p.H.set(at(f, t, sd - 1), idx, Scalar(1));
        }
    };

    for (long k = 0; k <= i; ++k) {
        const long t = i - 2 * k;
        fill(ProjFamily::T, t);
        fill(ProjFamily::S, t);
        for (int sd = 0; sd <= m; ++sd) {
            const std::size_t ti = at(ProjFamily::T, t, sd), si = at(ProjFamily::S, t, sd);
            p.F.set(k < i ? at(ProjFamily::T, t - 2, sd) : at(ProjFamily::L, j - r, sd), ti, Scalar(1));
            if (k < i) p.F.set(at(ProjFamily::S, t - 2, sd), si, Scalar(1));
            if (k == 0) {
                p.E.set(at(ProjFamily::R, r - j, sd), ti, Scalar(1));
                add_template(p.E, si, ProjFamily::R, r - j, j + 1, r, sd, +1);  // sigma
            } else {
                p.E.add_to(at(ProjFamily::S, t + 2, sd), ti, Scalar(1));
                add_template(p.E, ti, ProjFamily::T, t + 2, k, i - k + 1, sd, +1);
                add_template(p.E, si, ProjFamily::S, t + 2, k, i - k + 1, sd, +1);
                add_template(p.E, si, ProjFamily::S, t + 2, j + 1, r, sd, +1);
            }
        }
    }
    for (long k = 0; k <= j; ++k) {
        const long tl = j - r - 2 * k, tr = r - j + 2 * k;
        fill(ProjFamily::L, tl);
        fill(ProjFamily::R, tr);
        for (int sd = 0; sd <= m; ++sd) {
            const std::size_t li = at(ProjFamily::L, tl, sd), ri = at(ProjFamily::R, tr, sd);
            if (k < j) {
                p.F.set(at(ProjFamily::L, tl - 2, sd), li, Scalar(1));
                p.E.set(at(ProjFamily::R, tr + 2, sd), ri, Scalar(1));
            }
            // L continues the T/S template past the bottom of T
            if (k == 0) {
                p.E.add_to(at(ProjFamily::S, -i, sd), li, Scalar(1));
                add_template(p.E, li, ProjFamily::T, -i, i + 1, 0, sd, +1);
            } else {
                add_template(p.E, li, ProjFamily::L, tl + 2, i + 1 + k, -k, sd, +1);
            }
            if (k == 0)
                p.F.set(at(ProjFamily::S, i, sd), ri, Scalar(1));
            else {
                add_template(p.F, ri, ProjFamily::R, tr - 2, k, r - j + k - 1, sd, -1);
                add_template(p.F, ri, ProjFamily::R, tr - 2, j + 1, r, sd, +1);
            }
        }
    }
    if (spec.twist != 0) {
        ModuleRep t = build_twist(p, spec.twist);
        return t;
    }
    return p;
}

ModuleRep build_projective_cover(const Session& s, const ProjSpec& spec) {
    ModuleRep p = build_projective_cover_unchecked(s, spec);
    Report rep = verify_relations(p);
    if (!rep.pass()) {
        for (const auto& it : rep.items)
            if (!it.pass && it.witness.rfind("mode-unsupported", 0) == 0) throw ModeUnsupported(to_string(spec) + ": " + it.witness);
        throw ConstructionError(to_string(spec) + " fails its relations:\n" + rep.to_text());
    }
    return p;
}

ProjSpec infer_proj_spec(const ModuleRep& p) {
    const Session& s = p.session;
    const std::regex re(R"(([TSLR])_\{(-?\d+),(\d+)\})");
    ProjSpec spec;
    long t_count = 0, top_t = 0;
    bool have_top = false;
    int max_s = -1;
    for (const auto& l : p.labels) {
        std::smatch mt;
        if (!std::regex_match(l.tag, mt, re)) throw InvalidInput("label '" + l.tag + "' is not a projective-cover label");
        const int sd = std::stoi(mt[3]);
        max_s = std::max(max_s, sd);
        if (mt[1] == "T" && sd == 0) {
            const long t = std::stol(mt[2]);
            if (!have_top || t > top_t) top_t = t, have_top = true;
            ++t_count;
        }
    }
    if (!have_top) throw InvalidInput("no T family in the labels");
    spec.m = max_s;
    spec.i = static_cast<int>(t_count - 1);
    if (spec.i != top_t) throw InvalidInput("T family labels are inconsistent");
    const auto& top = p.labels[proj_index(s, spec, {ProjFamily::T, spec.i, 0})];
    Rational k = Rational(top.weight - spec.i) / s.half_ell();
    k.canonicalize();
    if (k.get_den() != 1) throw InvalidInput("twist weight is not a multiple of ell/2");
    spec.twist = k.get_num().get_si();
    if (p.dim() != 2 * static_cast<std::size_t>(spec.m + 1) * s.r()) throw InvalidInput("dimension is not 2(m+1)r");
    return spec;
}

Scalar sigma_coefficient(const Session& s, const ProjSpec& spec, int n) {
    const long j = s.r() - 2 - spec.i;
    if (n % 2 == 0) return Scalar(0);
    const CycloNum odd = s.quantum_integer(j + 1) * (s.q_power(static_cast<long>(s.r())) + s.q_power(-static_cast<long>(s.r()))) * s.inv_q_diff();
    return Scalar(odd) * s.degree_drop_coeff(n);
}

Report verify_dominant_generation(const ModuleRep& twisted, const ProjSpec& spec) {
    const Session& s = twisted.session;
    const long i = spec.i, r = s.r(), j = r - 2 - i;
    const int m = spec.m;
    Report rep;
    rep.title = "dominant generation of " + to_string(spec);
    rep.add("dimension 2(m+1)r", twisted.dim() == 2 * static_cast<std::size_t>(m + 1) * r, std::to_string(twisted.dim()));
    if (twisted.dim() != 2 * static_cast<std::size_t>(m + 1) * r) return rep;
    // untwisting restores the matrices of P_i^m exactly
    const ModuleRep p = spec.twist ? build_twist(twisted, -spec.twist) : twisted;
    ProjSpec base = spec;
    base.twist = 0;
    auto at = [&](ProjFamily f, long t, int sd) { return proj_index(s, base, {f, t, sd}); };
    auto unit = [&](std::size_t k) {
        Vec e(p.dim());
        e[k] = Scalar(1);
        return e;
    };
    auto minus_weight = [&](const Vec& v, long t) {
        Vec out = p.H.apply(v);
        const Scalar w(t);
        for (std::size_t k = 0; k < v.size(); ++k) out[k] -= w * v[k];
        return out;
    };
    auto pow_apply = [&](const SparseMatrix& a, Vec v, long e) {
        for (long k = 0; k < e; ++k) v = a.apply(v);
        return v;
    };
    // sigma(N) x for x in the generalized weight-t space
    auto sigma = [&](Vec x, long t) {
        Vec out(x.size());
        for (int n = 0; n <= m; ++n) {
            const Scalar c = sigma_coefficient(s, spec, n);
            if (!c.is_zero())
                for (std::size_t k = 0; k < x.size(); ++k) out[k] += c * x[k];
            x = minus_weight(x, t);
        }
        return out;
    };

    const Vec v = unit(at(ProjFamily::T, i, m));
    const Vec fe = p.F.apply(p.E.apply(v));
    const Vec fefe = p.F.apply(p.E.apply(fe));
    rep.add("(FE)^2 v = sigma(H - i) FE v", fefe == sigma(fe, i));
    Vec low = fefe;
    for (int k = 0; k < m; ++k) low = minus_weight(low, i);
    rep.add("(FE)^2 v has degree < m", is_zero(low));
    Vec h = v;
    for (int k = 0; k < m; ++k) h = minus_weight(h, i);
    rep.add("(H - i)^m v != 0", !is_zero(h));
    rep.add("(H - i)^(m+1) v = 0", is_zero(minus_weight(h, i)));
    rep.add("v generates the module", submodule_generated(p, {v}).dim() == p.dim());

    // defining words applied to v
    std::vector<std::pair<std::size_t, Vec>> recomputed;
    auto push_chain = [&](ProjFamily f, long t, const Vec& top) {
        Vec x = top;
        for (int sd = m; sd >= 0; --sd) {
            recomputed.emplace_back(at(f, t, sd), x);
            x = minus_weight(x, t);
        }
    };
    const Vec r0 = p.E.apply(v);
    const Vec s0 = p.F.apply(r0);
    const Vec l0 = pow_apply(p.F, v, i + 1);
    for (long k = 0; k <= i; ++k) {
        push_chain(ProjFamily::T, i - 2 * k, pow_apply(p.F, v, k));
        push_chain(ProjFamily::S, i - 2 * k, pow_apply(p.F, s0, k));
    }
    for (long k = 0; k <= j; ++k) {
        push_chain(ProjFamily::L, j - r - 2 * k, pow_apply(p.F, l0, k));
        push_chain(ProjFamily::R, r - j + 2 * k, pow_apply(p.E, r0, k));
    }
    std::string bad;
    DenseMatrix<Scalar> all(0, p.dim());
    for (const auto& [idx, x] : recomputed) {
        all.append_row(x);
        if (bad.empty() && x != unit(idx)) bad = p.labels[idx].tag;
    }
    rep.add("defining words reproduce the basis", bad.empty(), bad.empty() ? "" : "first mismatch at " + bad);
    rep.add("family vectors are independent", rank(all) == p.dim());

    bool fl = true, fr = true, es = true, es0 = true;
    for (int sd = 0; sd <= m; ++sd) {
        const Vec t = unit(at(ProjFamily::T, i, sd));
        fl = fl && pow_apply(p.F, t, i + 1) == unit(at(ProjFamily::L, j - r, sd));
        fr = fr && is_zero(pow_apply(p.F, t, r));
        es = es && p.E.apply(unit(at(ProjFamily::S, i, sd))) == sigma(unit(at(ProjFamily::R, r - j, sd)), r - j);
    }
    es0 = is_zero(p.E.apply(unit(at(ProjFamily::S, i, 0))));
    rep.add("F^(i+1) T_{i,s} = L_{j-r,s}", fl);
    rep.add("F^r T_{i,s} = 0", fr);
    rep.add("E S_{i,s} = sigma(H - r + j) R_{r-j,s}", es);
    rep.add("E S_{i,0} = 0", es0);
    return rep;
}

Report certify_projcover_structure(const ModuleRep& p, const ProjSpec& spec, std::uint64_t seed) {
    const Session& s = p.session;
    const long i = spec.i, r = s.r(), j = r - 2 - i;
    const Rational shift = Rational(spec.twist) * s.half_ell();
    const Rational wi = shift + i, wjr = shift + (j + r);
    Report rep;
    rep.title = "projective cover structure of " + to_string(spec);

    // (a)
    FiltrationResult st = extract_standard_filtration(p, spec.m, seed);
    if (!st.found()) {
        rep.add("(a) standard filtration", false, st.note);
    } else {
        const auto& c = *st.certificate;
        const bool shape = c.claims.size() == 2 && c.claims[0].weight == wjr && c.claims[1].weight == wi;
        std::string got;
        for (const auto& q : c.claims) got += " " + q.weight.get_str();
        rep.add("(a) standard filtration V(j+r,m) < P, quotient V(i,m)", shape, "quotient weights" + got);
        rep.absorb(verify_certificate(p, c, seed), "(a) ");
    }
    // (b)
    FiltrationResult co = extract_costandard_filtration(p, spec.m, seed);
    if (!co.found()) {
        rep.add("(b) costandard filtration", false, co.note);
    } else {
        const auto& c = *co.certificate;
        const bool shape = c.claims.size() == 2 && c.claims[0].weight == wi && c.claims[1].weight == wjr;
        std::string got;
        for (const auto& q : c.claims) got += " " + q.weight.get_str();
        rep.add("(b) costandard filtration dual V(i,m) < P, quotient dual V(j+r,m)", shape, "quotient weights" + got);
        rep.absorb(verify_certificate(p, c, seed), "(b) ");
    }
    // (c)
    IsoResult iso = iso_test(build_dual(p), p, seed);
    rep.add("(c) dual(P) isomorphic to P", iso.found(), iso.note);
    // (d)
    const Subspace rad = radical(p);
    const ModuleRep head = quotient_module(p, rad);
    std::vector<SimpleLabel> tops = jordan_holder(head);
    const bool one = tops.size() == 1 && !tops[0].typical && tops[0].i == i && tops[0].highest == wi;
    rep.add("(d) P / rad P = L_i (x) C", one, to_string(tops));
    bool weights = head.dim() == static_cast<std::size_t>(i + 1);
    for (const auto& l : head.labels) weights = weights && Rational(wi - l.weight) >= 0 && Rational(wi - l.weight) <= 2 * i;
    rep.add("(d) radical codimension i+1 with weights i, i-2, ..., -i", weights, "codimension " + std::to_string(head.dim()));
    return rep;
}

Report certify_projcover_structure(const Session& s, const ProjSpec& spec, std::uint64_t seed) {
    return certify_projcover_structure(build_projective_cover(s, spec), spec, seed);
}

}  // namespace uqwb

namespace uqwb {

namespace {

struct SimpleCandidate {
    std::string name;
    ModuleRep module;
    Rational lowest;
};

// c(nu) = c(lambda) for the Casimir element
bool casimir_linked(const Session& s, const Rational& nu, const Rational& lambda) {
    auto c = [&](const Rational& x) { return s.q_power(Rational(x + 1)) + s.q_power(Rational(-x - 1)); };
    return c(nu) == c(lambda);
}

SparseMatrix casimir(const ModuleRep& m) {
    const Session& s = m.session;
    const KPair k = derive_K(m);
    const CycloNum inv = s.inv_q_diff();
    const Scalar w(inv * inv);
    return m.F * m.E + w * (Scalar(s.q_power(1L)) * k.K + Scalar(s.q_power(-1L)) * k.Kinv);
}

}  // namespace

ModuleRep build_via_tensor_summand(const Session& s, const ProjSpec& spec, std::uint64_t seed) {
    check_spec(s, spec);
    const long r = s.r(), j = r - 2 - spec.i;
    const Rational lambda = Rational(spec.twist) * s.half_ell() + spec.i;
    const Rational partner = lambda + 2 * (j + 1);

    // smallest simple S whose lowest weight mu makes lambda - mu typical and
    // whose shifted weights meet the Casimir class of lambda exactly at lambda and its partner
    std::vector<std::pair<int, SimpleCandidate>> cands;
    for (int a = 0; a <= r - 2; ++a)
        for (long k = -3; k <= 3; ++k) {
            ModuleRep l = k ? build_twist(build_simple(s, a), k) : build_simple(s, a);
            cands.push_back({a + 1, {"L_" + std::to_string(a) + " (x) C_" + std::to_string(k), std::move(l), Rational(k) * s.half_ell() - a}});
        }
    const int den = s.weight_denominator();
    for (long x = -4 * s.ell() * den; x <= 4 * s.ell() * den; ++x) {
        Rational alpha(x, den);
        alpha.canonicalize();
        if (!is_typical(s, alpha)) continue;
        cands.push_back({static_cast<int>(r), {"M_" + alpha.get_str(), ModuleRep{}, alpha - 2 * (r - 1)}});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [dimS, cand] : cands) {
        const Rational base = lambda - cand.lowest;
        if (!is_typical(s, base)) continue;
        std::vector<Rational> linked;
        for (int t = 0; t < dimS; ++t) {
            const Rational nu = lambda + 2 * t;  // base + (weight of S), weights of S are lowest + 2t
            if (casimir_linked(s, nu, lambda)) linked.push_back(nu);
        }
        if (linked.size() != 2 || linked[0] != lambda || linked[1] != partner) continue;
        if (cand.module.dim() == 0) cand.module = build_generalized_verma(s, Rational(cand.lowest + 2 * (r - 1)), 0);
        const ModuleRep big = build_tensor(build_generalized_verma(s, base, spec.m), cand.module);
        const SparseMatrix c = casimir(big);
        const CycloNum cl = (s.q_power(Rational(lambda + 1)) + s.q_power(Rational(-lambda - 1))) * s.inv_q_diff() * s.inv_q_diff();
        const SparseMatrix shifted = c - Scalar(cl) * SparseMatrix::identity(big.dim());
        // generalized eigenspace, block by block
        const BlockOps ops = block_ops(big);
        Subspace eig(ops.blocks);
        for (std::size_t b = 0; b < ops.blocks.count(); ++b) {
            const auto& idx = ops.blocks.members[b];
            DenseMatrix<Scalar> blk = shifted.block(idx, idx);
            DenseMatrix<Scalar> pw = blk;
            for (std::size_t e = 1; e < idx.size(); ++e) pw = pw * blk;
            for (const auto& v : nullspace(pw)) eig.part(static_cast<int>(b)).insert(v);
        }
        if (!is_closed(ops, eig)) throw ConstructionError("Casimir eigenspace is not a submodule");
        ModuleRep p = submodule_module(big, eig);
        if (p.dim() != 2 * static_cast<std::size_t>(spec.m + 1) * r)
            throw ConstructionError("Casimir summand of V(" + base.get_str() + ") (x) " + cand.name + " has dimension " + std::to_string(p.dim()));
        (void)seed;
        return p;
    }
    throw SearchFailure("no simple module found to cut out " + to_string(spec) + " as a tensor summand");
}

}  // namespace uqwb
