// Acceptance run: one PASS/FAIL line per criterion over ell in {5, 8}.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "uqwb/errors.hpp"
#include "uqwb/suite.hpp"

using namespace uqwb;

namespace {

// Every criterion is an exact identity: no numeric tolerance anywhere.
constexpr int kNumericTolerance = 0;
constexpr std::size_t kMaxTensorDim = 256;
constexpr double kRelationBudgetSeconds = 300.0;
constexpr int kSweepMaxM = 2;
const std::vector<int> kEll{5, 8};

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;
};

void take(Outcome& o, const Report& r, const std::string& prefix) {
    std::size_t bad = 0;
    for (const auto& it : r.items)
        if (!it.pass) {
            ++bad;
            if (o.failures.size() < 8) o.failures.push_back(prefix + it.name + (it.witness.empty() ? "" : "  [" + it.witness + "]"));
        }
    o.pass = o.pass && bad == 0 && !r.items.empty();
    std::ostringstream d;
    d << prefix << r.items.size() - bad << "/" << r.items.size() << " checks";
    o.detail += (o.detail.empty() ? "" : "; ") + d.str();
}

SuiteBounds sweep(const Session& s) {
    SuiteBounds b = default_bounds(s);
    b.max_m = kSweepMaxM;
    b.max_dim = kMaxTensorDim;
    return b;
}

std::string ell_tag(const Session& s) { return "ell=" + std::to_string(s.ell()) + " "; }

}  // namespace

int main() {
    static_assert(kNumericTolerance == 0);
    std::vector<CatalogueReports> catalogue;
    double catalogue_seconds = 0;
    const auto t_all = std::chrono::steady_clock::now();

    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "relations on every constructed module",
         [&] {
             Outcome o;
             for (int ell : kEll) {
                 Session s = Session::make(ell);
                 catalogue.push_back(catalogue_checks(s, sweep(s)));
                 catalogue_seconds += catalogue.back().relations.seconds;
                 take(o, catalogue.back().relations, ell_tag(s));
                 o.detail += " (" + std::to_string(catalogue.back().modules) + " modules, " + std::to_string(catalogue.back().tensors) + " tensors)";
             }
             char buf[64];
             std::snprintf(buf, sizeof buf, "; %.1f s of %.0f s budget", catalogue_seconds, kRelationBudgetSeconds);
             o.detail += buf;
             o.pass = o.pass && catalogue_seconds <= kRelationBudgetSeconds;
             return o;
         }},
        {2, "dimension laws",
         [&] {
             Outcome o;
             for (int ell : kEll) {
                 Session s = Session::make(ell);
                 take(o, dimension_checks(s, sweep(s)), ell_tag(s));
             }
             return o;
         }},
        {3, "K is the blockwise exponential and K Kinv = 1",
         [&] {
             Outcome o;
             for (std::size_t k = 0; k < catalogue.size(); ++k) take(o, catalogue[k].k_exponential, "ell=" + std::to_string(kEll[k]) + " ");
             return o;
         }},
        {4, "duality",
         [&] {
             Outcome o;
             for (int ell : kEll) {
                 Session s = Session::make(ell);
                 take(o, duality_checks(s, sweep(s)), ell_tag(s));
             }
             return o;
         }},
        {5, "standard filtrations of V(lambda,m) (x) L_i",
         [&] {
             Outcome o;
             for (int ell : kEll) {
                 Session s = Session::make(ell);
                 take(o, tensor_filtration_checks(s, sweep(s)), ell_tag(s));
             }
             return o;
         }},
        {6, "splitting sections (three surjections per typical lambda and m)",
         [&] {
             Outcome o;
             for (int ell : kEll) {
                 Session s = Session::make(ell);
                 take(o, splitting_checks(s, sweep(s)), ell_tag(s));
                 std::string ws;
                 for (const auto& w : sample_typical_weights(s)) ws += (ws.empty() ? "" : ",") + to_string(w);
                 o.detail += " (lambda " + ws + ")";
             }
             return o;
         }},
        {7, "projective cover certification and single-vector generation",
         [&] {
             Outcome o;
             for (int ell : kEll) {
                 Session s = Session::make(ell);
                 take(o, projective_checks(s, sweep(s)), ell_tag(s));
             }
             return o;
         }},
        {8, "tensor summand isomorphic to the table construction",
         [&] {
             Outcome o;
             // the required specs (ell=8: i in {0,1}, m in {0,1}; ell=5: i in {0,1,2}, m=1)
             // are contained in the full sweep
             for (int ell : kEll) {
                 Session s = Session::make(ell);
                 std::vector<ProjSpec> specs;
                 for (int i = 0; i <= s.r() - 2; ++i)
                     for (int m = 0; m <= kSweepMaxM; ++m)
                         for (long k : {0L, 1L}) specs.push_back({i, m, k});
                 take(o, cross_construction_checks(s, specs), ell_tag(s));
             }
             return o;
         }},
        {9, "BGG reciprocity",
         [&] {
             Outcome o;
             for (int ell : kEll) {
                 Session s = Session::make(ell);
                 take(o, bgg_checks(s, sweep(s)), ell_tag(s));
             }
             return o;
         }},
        {10, "paper-literal K coefficients are diagnosed on degree-2 blocks",
         [&] {
             Outcome o;
             for (int ell : kEll) take(o, paper_literal_checks(ell), "ell=" + std::to_string(ell) + " ");
             return o;
         }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1f s", secs);
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << o.detail << "; " << buf << ")"
                  << std::endl;
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_all).count();
    std::cout << (all ? "all criteria pass" : "some criteria FAIL") << " (" << static_cast<int>(total) << " s)" << std::endl;
    return all ? 0 : 1;
}
