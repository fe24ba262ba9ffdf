#include "uqwb/splitting.hpp"

#include "uqwb/composition.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/filtration.hpp"
#include "uqwb/repmod.hpp"
#include "uqwb/subspace.hpp"

namespace uqwb {

namespace {

SparseMatrix power(const SparseMatrix& a, int e) {
    SparseMatrix p = SparseMatrix::identity(a.rows());
    for (int k = 0; k < e; ++k) p = a * p;
    return p;
}

void check_intertwines(Report& rep, const std::string& what, const SparseMatrix& lhs, const SparseMatrix& rhs) {
    rep.add(what, lhs == rhs, SparseMatrix::first_difference(lhs, rhs));
}

// Some x supported on the generalized weight-lambda block of the source with f x = y.
Vec preimage(const Surjection& s, const WeightBlocks& src, const WeightBlocks& tgt, const Vec& y) {
    const int bs = src.find(s.lambda), bt = tgt.find(s.lambda);
    if (bs < 0 || bt < 0) throw InvalidInput("surjection: weight " + s.lambda.get_str() + " missing from the source");
    const auto& cols = src.members[bs];
    const auto& rows = tgt.members[bt];
    Vec rhs(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) rhs[k] = y[rows[k]];
    auto x = solve(s.f.block(rows, cols), rhs);
    if (!x) throw InvalidInput("surjection: f is not onto the weight " + s.lambda.get_str() + " space");
    Vec full(s.source.dim());
    for (std::size_t k = 0; k < cols.size(); ++k) full[cols[k]] = (*x)[k];
    return full;
}

}  // namespace

SplittingSection verma_splitting_section(const Surjection& sj) {
    const Session& s = sj.source.session;
    if (!is_typical(s, sj.lambda))
        throw InvalidInput("splitting section unsupported for atypical weight " + sj.lambda.get_str() + ": " + typicality(s, sj.lambda).witness);
    const ModuleRep v = build_generalized_verma(s, sj.lambda, sj.m);
    const ModuleRep& src = sj.source;
    if (sj.f.rows() != v.dim() || sj.f.cols() != src.dim()) throw InvalidInput("surjection: matrix shape does not match the modules");
    for (auto [a, b, name] : {std::tuple{&v.E, &src.E, "E"}, {&v.F, &src.F, "F"}, {&v.H, &src.H, "H"}})
        if (!((*a) * sj.f == sj.f * (*b))) throw InvalidInput(std::string("surjection is not equivariant for ") + name);
    if (rank(sj.f.to_dense()) != v.dim()) throw InvalidInput("surjection: f is not onto");

    const int r = s.r(), m = sj.m;
    const std::size_t chain = m + 1;
    const SparseMatrix xv = power(v.E, r - 1) * power(v.F, r - 1);
    SplittingSection out;
    out.nu.assign(chain, {});
    for (std::size_t k = 0; k < chain; ++k) {
        Vec e(v.dim());
        e[k] = Scalar(1);
        Vec img = xv.apply(e);
        for (std::size_t j = chain; j < img.size(); ++j)
            if (!img[j].is_zero()) throw ConstructionError("X+X- v^k leaves the top chain");
        for (std::size_t k2 = 0; k2 <= k; ++k2) out.nu[k].push_back(img[k2]);
        for (std::size_t k2 = k + 1; k2 < chain; ++k2)
            if (!img[k2].is_zero()) throw ConstructionError("X+X- raises the degree");
        if (out.nu[k][k].is_zero()) throw ConstructionError("diagonal coefficient nu vanishes at a typical weight");
    }
    const Scalar& top = out.nu[m][m];
    out.gamma.assign(m, Scalar(0));
    for (int k = m - 1; k >= 0; --k) {
        Scalar acc = out.nu[m][k] / top;
        for (int k2 = k + 1; k2 < m; ++k2) acc -= out.gamma[k2] * out.nu[k2][k];
        out.gamma[k] = acc / out.nu[k][k];
    }

    const WeightBlocks sb = weight_blocks(src), vb = weight_blocks(v);
    Vec y(v.dim());
    y[m] = top.inverse();
    Vec u = preimage(sj, sb, vb, y);
    for (int k = 0; k < m; ++k) {
        Vec yk(v.dim());
        yk[k] = out.gamma[k];
        Vec uk = preimage(sj, sb, vb, yk);
        for (std::size_t j = 0; j < u.size(); ++j) u[j] -= uk[j];
    }
    const SparseMatrix xm = power(src.E, r - 1) * power(src.F, r - 1);
    const Vec w = xm.apply(u);

    // g(F^t v^k) = F^t (H - lambda)^(m-k) w
    SparseMatrix nil = src.H - Scalar(sj.lambda) * SparseMatrix::identity(src.dim());
    out.g = SparseMatrix(src.dim(), v.dim());
    Vec wk = w;
    for (int k = m; k >= 0; --k) {
        Vec col = wk;
        for (int t = 0; t < r; ++t) {
            const std::size_t idx = static_cast<std::size_t>(t) * chain + k;
            for (std::size_t i = 0; i < col.size(); ++i)
                if (!col[i].is_zero()) out.g.set(i, idx, col[i]);
            col = src.F.apply(col);
        }
        wk = nil.apply(wk);
    }

    Report& rep = out.report;
    rep.title = "splitting section for " + sj.name;
    check_intertwines(rep, "f g = id", sj.f * out.g, SparseMatrix::identity(v.dim()));
    check_intertwines(rep, "g E", out.g * v.E, src.E * out.g);
    check_intertwines(rep, "g F", out.g * v.F, src.F * out.g);
    check_intertwines(rep, "g H", out.g * v.H, src.H * out.g);
    const KPair kv = derive_K(v), ks = derive_K(src);
    check_intertwines(rep, "g K", out.g * kv.K, ks.K * out.g);
    check_intertwines(rep, "g K^-1", out.g * kv.Kinv, ks.Kinv * out.g);
    return out;
}

Surjection direct_sum_projection(const Session& s, const Rational& lambda, const Rational& mu, int m) {
    Surjection sj;
    sj.name = "V(" + lambda.get_str() + "," + std::to_string(m) + ") + V(" + mu.get_str() + "," + std::to_string(m) + ") projection";
    const ModuleRep a = build_generalized_verma(s, lambda, m);
    sj.source = build_direct_sum(a, build_generalized_verma(s, mu, m));
    sj.f = SparseMatrix(a.dim(), sj.source.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) sj.f.set(k, k, Scalar(1));
    sj.lambda = lambda;
    sj.m = m;
    return sj;
}

Surjection tensor_top_quotient(const Session& s, const Rational& lambda, int m, int i, bool dual_simple, std::uint64_t seed) {
    Surjection sj;
    const ModuleRep l = dual_simple ? build_dual(build_simple(s, i)) : build_simple(s, i);
    sj.name = "V(" + Rational(lambda + i).get_str() + "," + std::to_string(m) + ") (x) " + (dual_simple ? "dual L_" : "L_") + std::to_string(i) +
              " top quotient";
    sj.source = build_tensor(build_generalized_verma(s, lambda + i, m), l);
    sj.lambda = lambda;
    sj.m = m;
    FiltrationResult fr = extract_standard_filtration(sj.source, m, seed);
    if (!fr.found()) throw ConstructionError("tensor_top_quotient: " + fr.note);
    const auto& cert = *fr.certificate;
    if (cert.claims.back().weight != lambda) throw ConstructionError("tensor_top_quotient: last quotient has weight " + cert.claims.back().weight.get_str());
    const WeightBlocks mb = weight_blocks(sj.source);
    const Subspace below = span_of(mb, cert.chain[cert.chain.size() - 2]);
    std::vector<std::size_t> kept;
    const ModuleRep q = quotient_module(sj.source, below, &kept);
    // projection onto the kept coordinates after reducing modulo `below`
    SparseMatrix proj(q.dim(), sj.source.dim());
    std::vector<long> pos(sj.source.dim(), -1);
    for (std::size_t k = 0; k < kept.size(); ++k) pos[kept[k]] = static_cast<long>(k);
    for (std::size_t j = 0; j < sj.source.dim(); ++j) {
        const int b = mb.block_of[j];
        Vec e(mb.members[b].size());
        e[mb.offset[j]] = Scalar(1);
        const Vec red = below.part(b).reduce(e);
        for (std::size_t k = 0; k < red.size(); ++k)
            if (!red[k].is_zero()) proj.set(static_cast<std::size_t>(pos[mb.members[b][k]]), j, red[k]);
    }
    IsoResult iso = iso_test(q, build_generalized_verma(s, lambda, m), seed);
    if (!iso.found()) throw ConstructionError("tensor_top_quotient: top quotient not identified: " + iso.note);
    sj.f = (*iso.map) * proj;
    return sj;
}

}  // namespace uqwb
