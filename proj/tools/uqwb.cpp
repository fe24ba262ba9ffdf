// uqwb: command-line front end for the workbench.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uqwb/algebra.hpp"
#include "uqwb/bgg.hpp"
#include "uqwb/composition.hpp"
#include "uqwb/errors.hpp"
#include "uqwb/filtration.hpp"
#include "uqwb/projectives.hpp"
#include "uqwb/relations.hpp"
#include "uqwb/repmod.hpp"
#include "uqwb/serialize.hpp"
#include "uqwb/suite.hpp"

using namespace uqwb;

namespace {

struct Globals {
    int ell = 0;
    int weight_denominator = 2;
    std::string mode = "exponential";
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string format = "text";
};

/// What a verb hands back: the JSON document, its text rendering, and whether it passed.
struct Outcome {
    json doc;
    std::string text;
    bool pass = true;
};

Session make_session(const Globals& g) {
    if (g.ell == 0) throw InvalidInput("--ell is required for this command");
    return Session::make(g.ell, g.weight_denominator, parse_coeff_mode(g.mode));
}

Rational weight_arg(const Session& s, const std::string& text) {
    Rational w = parse_rational(text);
    s.require_weight(w);
    return w;
}

std::string module_text(const std::string& name, const ModuleRep& m) {
    std::ostringstream out;
    out << name << ": dim " << m.dim() << ", max degree " << m.max_degree << " (ell=" << m.session.ell() << ", "
        << to_string(m.session.mode()) << ")\n";
    for (const auto& ws : weight_decomposition(m))
        out << "  weight " << to_string(ws.weight) << ": dim " << ws.dim << ", degree " << ws.degree << "\n";
    return out.str();
}

Outcome module_outcome(const std::string& name, const ModuleRep& m) { return {module_to_json(m), module_text(name, m), true}; }

Outcome report_outcome(const Report& r) { return {report_to_json(r), r.to_text(), r.pass()}; }

ModuleRep load_module(const std::string& path) { return module_from_json(read_json_file(path)); }

std::string matrix_text(const SparseMatrix& a) {
    std::ostringstream out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? ", " : "") << a.get(i, j).to_string();
        out << "]\n";
    }
    return out.str();
}

json matrix_json(const SparseMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.get(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit(const Globals& g, const Outcome& o) {
    if (!g.out.empty()) write_json_file(g.out, o.doc);
    if (g.format == "json")
        std::cout << o.doc.dump(1) << "\n";
    else
        std::cout << o.text << (o.text.empty() || o.text.back() == '\n' ? "" : "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for the unrolled restricted quantum sl2 at a root of unity"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--ell", g.ell, "order of q (q = exp(2 pi i / ell))")->check(CLI::Range(2, 200));
    app.add_option("--weight-denominator", g.weight_denominator, "weights lie in (1/N)Z")->check(CLI::Range(1, 24));
    app.add_option("--mode", g.mode, "K coefficient convention")->check(CLI::IsMember({"exponential", "paper-literal"}));
    app.add_option("--seed", g.seed, "seed for randomized sub-steps");
    app.add_option("--out", g.out, "also write the JSON document to this file");
    app.add_option("--format", g.format, "stdout format")->check(CLI::IsMember({"json", "text"}));

    std::optional<Outcome> result;
    std::string file, file2, weight = "0", word;
    int degree = 0, i = 0, m = 0, max_i = -1, max_m = 2;
    long k = 0;
    bool costandard = false, all_pairs = false;
    std::vector<std::string> typical;

    auto* build = app.add_subcommand("build", "construct a module and emit its dump");
    std::string kind;
    build->add_option("kind", kind)->required()->check(CLI::IsMember({"verma", "simple", "one-dim"}));
    build->add_option("--weight", weight, "highest weight of a Verma module");
    build->add_option("--degree", degree, "generalized degree m")->check(CLI::NonNegativeNumber);
    build->add_option("--i", i, "index of the simple L_i")->check(CLI::NonNegativeNumber);
    build->add_option("--k", k, "C_{k ell/2}");
    build->callback([&] {
        Session s = make_session(g);
        if (kind == "verma")
            result = module_outcome("V(" + weight + "," + std::to_string(degree) + ")", build_generalized_verma(s, weight_arg(s, weight), degree));
        else if (kind == "simple")
            result = module_outcome("L_" + std::to_string(i), build_simple(s, i));
        else
            result = module_outcome("C_" + std::to_string(k), build_one_dim(s, k));
    });

    auto* verify = app.add_subcommand("verify", "check the defining relations of a module dump");
    verify->add_option("file", file)->required()->check(CLI::ExistingFile);
    verify->callback([&] { result = report_outcome(verify_relations(load_module(file))); });

    auto* decomp = app.add_subcommand("decomp", "generalized weight spaces of a module dump");
    decomp->add_option("file", file)->required()->check(CLI::ExistingFile);
    decomp->callback([&] {
        ModuleRep mod = load_module(file);
        json spaces = json::array();
        for (const auto& ws : weight_decomposition(mod))
            spaces.push_back(json{{"weight", to_string(ws.weight)}, {"dim", ws.dim}, {"degree", ws.degree}});
        result = Outcome{json{{"dim", mod.dim()}, {"weight_spaces", spaces}}, module_text(file, mod), true};
    });

    auto* dual = app.add_subcommand("dual", "dual of a module dump");
    dual->add_option("file", file)->required()->check(CLI::ExistingFile);
    dual->callback([&] { result = module_outcome("dual " + file, build_dual(load_module(file))); });

    auto* tensor = app.add_subcommand("tensor", "tensor product of two module dumps");
    tensor->add_option("a", file)->required()->check(CLI::ExistingFile);
    tensor->add_option("b", file2)->required()->check(CLI::ExistingFile);
    tensor->callback([&] {
        ModuleRep a = load_module(file), b = load_module(file2);
        if (!(a.session == b.session)) throw InvalidInput("modules come from different sessions");
        result = module_outcome(file + " (x) " + file2, build_tensor(a, b));
    });

    auto* filtration = app.add_subcommand("filtration", "search a standard (or costandard) filtration and emit its certificate");
    filtration->add_option("file", file)->required()->check(CLI::ExistingFile);
    filtration->add_option("--degree", degree, "degree m of the generalized Vermas")->check(CLI::NonNegativeNumber);
    filtration->add_flag("--costandard", costandard, "filter by duals of generalized Vermas");
    filtration->callback([&] {
        ModuleRep mod = load_module(file);
        FiltrationResult f = costandard ? extract_costandard_filtration(mod, degree, g.seed) : extract_standard_filtration(mod, degree, g.seed);
        if (!f.found()) {
            result = Outcome{json{{"status", "fail"}, {"note", f.note}}, "no filtration found: " + f.note, false};
            return;
        }
        std::string text = "filtration of length " + std::to_string(f.certificate->claims.size()) + ", quotients from the bottom:\n";
        for (const auto& c : f.certificate->claims)
            text += "  " + to_string(c.kind) + " (" + to_string(c.weight) + ", " + std::to_string(c.degree) + ")\n";
        result = Outcome{certificate_to_json(mod, *f.certificate), text, true};
    });

    auto* jh = app.add_subcommand("jh", "composition factors of a module dump");
    jh->add_option("file", file)->required()->check(CLI::ExistingFile);
    jh->callback([&] {
        auto factors = jordan_holder(load_module(file));
        json arr = json::array();
        std::string text;
        for (const auto& f : factors) {
            arr.push_back(json{{"simple", f.to_string()}, {"highest", to_string(f.highest)}, {"dim", f.dim}});
            text += f.to_string() + "  (highest " + to_string(f.highest) + ", dim " + std::to_string(f.dim) + ")\n";
        }
        result = Outcome{json{{"factors", arr}}, text, true};
    });

    auto* typ = app.add_subcommand("typical", "typicality of a weight");
    typ->add_option("--weight", weight)->required();
    typ->callback([&] {
        Session s = make_session(g);
        TypicalityVerdict v = typicality(s, weight_arg(s, weight));
        const std::string word = v.typical ? "typical" : "atypical";
        result = Outcome{json{{"weight", to_string(v.weight)}, {"verdict", word}, {"witness", v.witness}}, word + "\n  " + v.witness, true};
    });

    auto* bgg = app.add_subcommand("bgg", "filtration multiplicities of projective covers against Jordan-Holder multiplicities");
    bgg->add_option("--m", m, "degree")->check(CLI::NonNegativeNumber);
    bgg->add_option("--typical", typical, "typical weights appended to the atypical window");
    bgg->callback([&] {
        Session s = make_session(g);
        std::vector<Rational> extra;
        for (const auto& t : typical) extra.push_back(weight_arg(s, t));
        if (typical.empty()) extra = sample_typical_weights(s);
        BggTable t = bgg_table(s, m, bgg_window(s, extra), g.seed);
        std::ostringstream text;
        text << "(P_lambda : V(mu," << m << ")) vs [V(mu,0) : L_lambda], nonzero cells:\n";
        for (const auto& c : t.cells)
            if (c.filtration || c.jh)
                text << "  lambda=" << to_string(c.lambda) << " mu=" << to_string(c.mu) << ": " << c.filtration << " vs " << c.jh
                     << (c.equal() ? "" : "  MISMATCH") << "\n";
        text << (t.report.pass() ? "pass" : "FAIL") << " (" << t.cells.size() << " cells)";
        result = Outcome{bgg_to_json(t), text.str(), t.report.pass()};
    });

    auto* pcover = app.add_subcommand("pcover", "projective cover P_i^m (x) C_{k ell/2}");
    pcover->add_option("--i", i)->required()->check(CLI::NonNegativeNumber);
    pcover->add_option("--m", m)->check(CLI::NonNegativeNumber);
    pcover->add_option("--twist", k);
    pcover->callback([&] {
        Session s = make_session(g);
        ProjSpec spec{i, m, k};
        result = module_outcome(to_string(spec), build_projective_cover(s, spec));
    });

    auto* pcert = app.add_subcommand("pcover-certify", "re-certify a serialized projective cover");
    pcert->add_option("file", file)->required()->check(CLI::ExistingFile);
    pcert->callback([&] {
        ModuleRep p = load_module(file);
        ProjSpec spec = infer_proj_spec(p);
        Report r;
        r.title = "certify " + to_string(spec);
        r.absorb(verify_relations(p), "relations: ");
        r.absorb(verify_dominant_generation(p, spec), "generation: ");
        r.absorb(certify_projcover_structure(p, spec, g.seed), "structure: ");
        result = report_outcome(r);
    });

    auto* vcert = app.add_subcommand("verify-cert", "re-check a serialized filtration certificate");
    vcert->add_option("file", file)->required()->check(CLI::ExistingFile);
    vcert->callback([&] {
        auto [mod, cert] = certificate_from_json(read_json_file(file));
        Report r = verify_relations(mod);
        r.title = "certificate " + file;
        r.absorb(verify_certificate(mod, cert, g.seed), "certificate: ");
        result = report_outcome(r);
    });

    auto* act_cmd = app.add_subcommand("act", "matrix of a word in E, F, K, Kinv, H on a module dump");
    act_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
    act_cmd->add_option("--word", word, "e.g. \"E F F H\"; the leftmost generator acts last")->required();
    act_cmd->callback([&] {
        ModuleRep mod = load_module(file);
        SparseMatrix a = act(AlgebraElement::word(parse_word(word)), mod);
        result = Outcome{json{{"word", word}, {"matrix", matrix_json(a)}}, word + " on " + file + ":\n" + matrix_text(a), true};
    });

    auto* suite = app.add_subcommand("suite", "run the full check suite for one ell");
    suite->add_option("--max-i", max_i, "largest i (default r-2)");
    suite->add_option("--max-m", max_m, "largest degree m")->check(CLI::NonNegativeNumber);
    suite->add_flag("--all-pairs", all_pairs, "tensor every ordered pair of the catalogue");
    suite->callback([&] {
        Session s = make_session(g);
        SuiteBounds b = default_bounds(s);
        if (max_i >= 0 || suite->count("--max-i")) b.max_i = max_i;
        b.max_m = max_m;
        b.all_pairs = all_pairs;
        validate_bounds(s, b);
        result = report_outcome(run_suite(s, b, g.seed));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InvalidInput& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (!result) return 2;
    try {
        emit(g, *result);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return result->pass ? 0 : 1;
}
