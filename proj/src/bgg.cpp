#include "uqwb/bgg.hpp"

#include <map>

#include "uqwb/composition.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/filtration.hpp"
#include "uqwb/repmod.hpp"

namespace uqwb {

std::optional<ProjSpec> atypical_decomposition(const Session& s, const Rational& lambda, int m) {
    if (is_typical(s, lambda)) return std::nullopt;
    // lambda - k ell/2 in {0, ..., r-2}: k lies within one step of 2 lambda / ell
    Rational guess = lambda / s.half_ell();
    const long centre = static_cast<long>(mpz_class(guess.get_num() / guess.get_den()).get_si());
    for (long k = centre - 2; k <= centre + 2; ++k) {
        const Rational i = lambda - Rational(k) * s.half_ell();
        if (i.get_den() == 1 && i >= 0 && i <= s.r() - 2) return ProjSpec{static_cast<int>(i.get_num().get_si()), m, k};
    }
    throw ConstructionError("atypical weight " + lambda.get_str() + " has no decomposition i + k ell/2");
}

ModuleRep projective_cover(const Session& s, const Rational& lambda, int m) {
    if (auto spec = atypical_decomposition(s, lambda, m)) return build_projective_cover(s, *spec);
    return build_generalized_verma(s, lambda, m);
}

std::vector<Rational> bgg_window(const Session& s, const std::vector<Rational>& typical) {
    std::vector<Rational> out;
    for (long w = -(s.r() - 1); w <= 2 * s.r() - 2; ++w) out.emplace_back(w);
    out.insert(out.end(), typical.begin(), typical.end());
    return out;
}

BggTable bgg_table(const Session& s, int m, const std::vector<Rational>& weights, std::uint64_t seed) {
    BggTable t;
    t.m = m;
    t.weights = weights;
    t.report.title = "BGG reciprocity, degree " + std::to_string(m);
    std::map<Rational, std::vector<SimpleLabel>> jh;
    for (const auto& mu : weights) jh[mu] = jordan_holder(build_generalized_verma(s, mu, 0));
    for (const auto& lambda : weights) {
        const ModuleRep p = projective_cover(s, lambda, m);
        FiltrationResult fr = extract_standard_filtration(p, m, seed);
        const std::string row = "P_" + lambda.get_str();
        if (!fr.found()) {
            t.report.add(row + " standard filtration", false, fr.note);
            continue;
        }
        Report cert = verify_certificate(p, *fr.certificate, seed);
        t.report.add(row + " certificate verified", cert.pass());
        std::map<Rational, int> counts;
        for (const auto& c : fr.certificate->claims) ++counts[c.weight];
        for (const auto& mu : weights) {
            BggCell cell{lambda, mu, counts.count(mu) ? counts[mu] : 0, multiplicity(jh[mu], lambda)};
            t.report.add("BGG cell (" + lambda.get_str() + "," + mu.get_str() + ")", cell.equal(),
                         std::to_string(cell.filtration) + " vs " + std::to_string(cell.jh));
            t.cells.push_back(cell);
        }
    }
    return t;
}

}  // namespace uqwb
