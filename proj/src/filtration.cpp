#include "uqwb/filtration.hpp"

#include <algorithm>
#include <map>

#include "uqwb/errors.hpp"
#include "uqwb/repmod.hpp"
#include "uqwb/subspace.hpp"

namespace uqwb {

std::string to_string(QuotientKind k) { return k == QuotientKind::Verma ? "verma" : "dual-verma"; }

FiltrationResult extract_standard_filtration(const ModuleRep& m, int deg, std::uint64_t seed) {
    const std::size_t piece = static_cast<std::size_t>(deg + 1) * m.session.r();
    if (m.dim() % piece != 0)
        return {std::nullopt, "dimension " + std::to_string(m.dim()) + " not divisible by (deg+1)r = " + std::to_string(piece)};
    const WeightBlocks mb = weight_blocks(m);
    std::mt19937_64 rng(seed);
    Subspace acc(mb);
    FiltrationCertificate cert;
    cert.chain.push_back({});
    while (acc.dim() < m.dim()) {
        std::vector<std::size_t> kept;
        ModuleRep q = quotient_module(m, acc, &kept);
        const BlockOps qops = block_ops(q);
        // Highest weight vectors of the quotient, grouped by weight (decreasing).
        std::map<Rational, std::vector<WeightedVector>, std::greater<>> by_weight;
        for (auto& hv : highest_weight_vectors(q))
            if (hv.degree <= deg) by_weight[hv.weight].push_back(std::move(hv));
        bool advanced = false;
        for (auto& [w, vecs] : by_weight) {
            std::vector<Vec> candidates, pool;
            for (const auto& hv : vecs) {
                pool.push_back(hv.vector);
                if (hv.degree == deg) candidates.push_back(hv.vector);
            }
            if (candidates.empty()) continue;
            if (pool.size() > 1) candidates.push_back(random_combination(rng, pool));
            for (const auto& v : candidates) {
                Subspace s = submodule_generated(qops, {v});
                if (s.dim() != piece) continue;
                for (const auto& qv : s.basis(qops.blocks)) {
                    Vec lifted(m.dim());
                    for (std::size_t k = 0; k < kept.size(); ++k) lifted[kept[k]] = qv[k];
                    for (std::size_t b = 0; b < mb.count(); ++b) {
                        Vec part = block_part(mb, static_cast<int>(b), lifted);
                        if (!is_zero(part)) acc.part(static_cast<int>(b)).insert(part);
                    }
                }
                cert.chain.push_back(acc.basis(mb));
                cert.claims.push_back({QuotientKind::Verma, w, deg});
                advanced = true;
                break;
            }
            if (advanced) break;
        }
        if (!advanced)
            return {std::nullopt, "no degree-" + std::to_string(deg) + " highest weight vector generates a generalized Verma module in the quotient of dimension " +
                                      std::to_string(q.dim())};
    }
    return {std::move(cert), "found"};
}

FiltrationResult extract_costandard_filtration(const ModuleRep& m, int deg, std::uint64_t seed) {
    const ModuleRep d = build_dual(m);
    FiltrationResult st = extract_standard_filtration(d, deg, seed);
    if (!st.found()) return {std::nullopt, "dual has no standard filtration: " + st.note};
    const WeightBlocks mb = weight_blocks(m);
    const auto& sc = *st.certificate;
    const std::size_t n = sc.claims.size();
    FiltrationCertificate cert;
    for (std::size_t k = 0; k <= n; ++k) {
        Subspace dual_part = span_of(mb, sc.chain[n - k]);
        cert.chain.push_back(annihilator(mb, dual_part).basis(mb));
        if (k > 0) cert.claims.push_back({QuotientKind::DualVerma, sc.claims[n - k].weight, deg});
    }
    return {std::move(cert), "found"};
}

ModuleRep subquotient(const ModuleRep& m, const std::vector<Vec>& lower, const std::vector<Vec>& upper) {
    const WeightBlocks mb = weight_blocks(m);
    const Subspace up = span_of(mb, upper);
    ModuleRep sub = submodule_module(m, up);
    std::vector<std::size_t> start(mb.count());
    std::size_t n = 0;
    for (std::size_t b = 0; b < mb.count(); ++b) {
        start[b] = n;
        n += up.part(static_cast<int>(b)).rank();
    }
    std::vector<Vec> low_coords;
    for (const auto& v : lower) {
        Vec c(n);
        for (std::size_t b = 0; b < mb.count(); ++b) {
            const Echelon& e = up.part(static_cast<int>(b));
            Vec part = block_part(mb, static_cast<int>(b), v);
            if (!e.contains(part)) throw InvalidInput("subquotient: lower space not inside upper space");
            Vec cc = e.coordinates(part);
            for (std::size_t j = 0; j < cc.size(); ++j) c[start[b] + j] = cc[j];
        }
        low_coords.push_back(std::move(c));
    }
    return quotient_module(sub, span_of(weight_blocks(sub), low_coords));
}

Report verify_certificate(const ModuleRep& m, const FiltrationCertificate& c, std::uint64_t seed) {
    Report rep;
    rep.title = "filtration certificate";
    const WeightBlocks mb = weight_blocks(m);
    const BlockOps ops = block_ops(m);
    const std::size_t n = c.claims.size();
    if (c.chain.size() != n + 1) {
        rep.add("chain length matches claims", false, std::to_string(c.chain.size()) + " steps for " + std::to_string(n) + " claims");
        return rep;
    }
    std::vector<Subspace> steps;
    for (const auto& basis : c.chain) steps.push_back(span_of(mb, basis));
    rep.add("bottom is zero", steps.front().dim() == 0);
    rep.add("top is the whole module", steps.back().dim() == m.dim(),
            std::to_string(steps.back().dim()) + " of " + std::to_string(m.dim()));
    std::vector<bool> closed;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        closed.push_back(is_closed(ops, steps[k]));
        rep.add("step " + std::to_string(k) + " is a submodule", closed.back());
    }
    for (std::size_t k = 0; k < n; ++k) {
        const std::string tag = "quotient " + std::to_string(k + 1);
        bool nested = true;
        for (const auto& v : c.chain[k]) nested = nested && steps[k + 1].contains(mb, v);
        const bool grows = steps[k + 1].dim() > steps[k].dim();
        rep.add(tag + " strictly ascending", nested && grows);
        if (!(nested && grows && closed[k] && closed[k + 1])) continue;
        const auto& claim = c.claims[k];
        ModuleRep q = subquotient(m, c.chain[k], c.chain[k + 1]);
        const std::size_t want = static_cast<std::size_t>(claim.degree + 1) * m.session.r();
        rep.add(tag + " dimension (deg+1)r", q.dim() == want, std::to_string(q.dim()));
        bool ok = claim.kind == QuotientKind::Verma ? is_generalized_verma(q, claim.weight, claim.degree, seed)
                                                    : is_generalized_verma(build_dual(q), claim.weight, claim.degree, seed);
        rep.add(tag + " is " + to_string(claim.kind) + " V(" + claim.weight.get_str() + "," + std::to_string(claim.degree) + ")", ok);
    }
    return rep;
}

}  // namespace uqwb
