#include "doctest.h"
#include "support.hpp"
#include "uqwb/filtration.hpp"
#include "uqwb/repmod.hpp"
#include "uqwb/serialize.hpp"
#include "uqwb/structure.hpp"
#include "uqwb/subspace.hpp"

using namespace uqwb;

namespace {

std::vector<Rational> claimed_weights(const FiltrationCertificate& c) {
    std::vector<Rational> out;
    for (const auto& q : c.claims) out.push_back(q.weight);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("a generalized Verma module is its own filtration") {
    Session s = Session::make(8);
    ModuleRep v = build_generalized_verma(s, Rational(0), 1);
    FiltrationResult f = extract_standard_filtration(v, 1);
    REQUIRE(f.found());
    CHECK(f.certificate->claims.size() == 1);
    CHECK(f.certificate->chain.size() == 2);
    CHECK(verify_certificate(v, *f.certificate).pass());
    FiltrationResult d = extract_costandard_filtration(build_dual(v), 1);
    REQUIRE(d.found());
    CHECK(d.certificate->claims.size() == 1);
    CHECK(d.certificate->claims[0].kind == QuotientKind::DualVerma);
}

TEST_CASE("V (x) L_i is filtered by V(lambda+i-2k, m)") {
    for (int ell : {5, 8}) {
        Session s = Session::make(ell);
        for (const Rational& lambda : {Rational(0), Rational(3, 2), Rational(-1)})
            for (int i : {1, 2})
                for (int m : {0, 1}) {
                    ModuleRep t = build_tensor(build_generalized_verma(s, lambda, m), build_simple(s, i));
                    FiltrationResult f = extract_standard_filtration(t, m);
                    REQUIRE(f.found());
                    std::vector<Rational> want;
                    for (int k = i; k >= 0; --k) want.push_back(lambda + i - 2 * k);
                    CHECK(claimed_weights(*f.certificate) == want);
                    CHECK(verify_certificate(t, *f.certificate).pass());
                }
    }
}

TEST_CASE("simple modules have no filtration by generalized Vermas") {
    Session s = Session::make(8);
    CHECK_FALSE(extract_standard_filtration(build_simple(s, 1), 0).found());
    CHECK_FALSE(extract_costandard_filtration(build_simple(s, 2), 0).found());
}

TEST_CASE("tampered certificates are rejected") {
    Session s = Session::make(5);
    ModuleRep t = build_tensor(build_generalized_verma(s, Rational(3, 2), 1), build_simple(s, 1));
    FiltrationResult f = extract_standard_filtration(t, 1);
    REQUIRE(f.found());
    FiltrationCertificate bad = *f.certificate;
    bad.claims[0].weight += 2;
    CHECK_FALSE(verify_certificate(t, bad).pass());
    bad = *f.certificate;
    bad.claims[1].kind = QuotientKind::DualVerma;
    CHECK_FALSE(verify_certificate(t, bad).pass());
    bad = *f.certificate;
    bad.chain[1].pop_back();
    CHECK_FALSE(verify_certificate(t, bad).pass());
}

TEST_CASE("certificates survive serialization") {
    Session s = Session::make(8);
    ModuleRep t = build_tensor(build_generalized_verma(s, Rational(1, 2), 1), build_dual(build_simple(s, 2)));
    FiltrationResult f = extract_costandard_filtration(build_dual(t), 1);
    REQUIRE(f.found());
    const ModuleRep d = build_dual(t);
    json j = certificate_to_json(d, *f.certificate);
    CHECK(j["quotient_claims"][0]["kind"] == "dual-verma");
    auto [m, c] = certificate_from_json(json::parse(j.dump()));
    CHECK(verify_certificate(m, c).pass());
    CHECK(certificate_to_json(m, c).dump() == j.dump());
}

TEST_CASE("subquotients") {
    Session s = Session::make(8);
    ModuleRep v = build_generalized_verma(s, Rational(1, 2), 2);
    const auto blocks = weight_blocks(v);
    std::vector<Vec> lower = submodule_generated(v, {testing::unit(v.dim(), 0)}).basis(blocks);
    std::vector<Vec> upper = submodule_generated(v, {testing::unit(v.dim(), 1)}).basis(blocks);
    ModuleRep q = subquotient(v, lower, upper);
    CHECK(q.dim() == static_cast<std::size_t>(s.r()));
    CHECK(is_generalized_verma(q, Rational(1, 2), 0));
}
