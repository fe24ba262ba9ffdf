#include "uqwb/serialize.hpp"

#include <fstream>

#include "uqwb/errors.hpp"

namespace uqwb {

namespace {

json matrix_to_json(const SparseMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        std::size_t next = 0;
        for (const auto& [col, v] : a.row(i)) {
            for (; next < col; ++next) row.push_back("0");
            row.push_back(v.to_string());
            next = col + 1;
        }
        for (; next < a.cols(); ++next) row.push_back("0");
        rows.push_back(std::move(row));
    }
    return rows;
}

Vec vector_from_json(const CycloField& field, const json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) throw InvalidInput("expected a row of " + std::to_string(n) + " scalars");
    Vec v(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::string text = j[k].get<std::string>();
        if (text != "0") v[k] = Scalar::parse(field, text);
    }
    return v;
}

SparseMatrix matrix_from_json(const CycloField& field, const json& j, std::size_t n, const char* name) {
    if (!j.is_array() || j.size() != n) throw InvalidInput(std::string("matrix ") + name + " must have " + std::to_string(n) + " rows");
    SparseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec row = vector_from_json(field, j[i], n);
        for (std::size_t k = 0; k < n; ++k)
            if (!row[k].is_zero()) a.set(i, k, row[k]);
    }
    return a;
}

json vector_to_json(const Vec& v) {
    json row = json::array();
    for (const auto& x : v) row.push_back(x.to_string());
    return row;
}

}  // namespace

json session_to_json(const Session& s) {
    return json{{"ell", s.ell()}, {"N", s.weight_denominator()}, {"mode", to_string(s.mode())}};
}

Session session_from_json(const json& j) {
    try {
        return Session::make(j.at("ell").get<int>(), j.value("N", 2), parse_coeff_mode(j.value("mode", std::string("exponential"))));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad session: ") + e.what());
    }
}

json module_to_json(const ModuleRep& m) {
    json labels = json::array();
    for (const auto& l : m.labels) labels.push_back(json{{"weight", to_string(l.weight)}, {"degree", l.degree}, {"tag", l.tag}});
    return json{{"session", session_to_json(m.session)},
                {"dim", m.dim()},
                {"max_degree", m.max_degree},
                {"labels", labels},
                {"E", matrix_to_json(m.E)},
                {"F", matrix_to_json(m.F)},
                {"H", matrix_to_json(m.H)}};
}

ModuleRep module_from_json(const json& j) {
    try {
        ModuleRep m;
        m.session = session_from_json(j.at("session"));
        const std::size_t n = j.at("dim").get<std::size_t>();
        m.max_degree = j.at("max_degree").get<int>();
        const auto& labels = j.at("labels");
        if (labels.size() != n) throw InvalidInput("label count does not match dim");
        for (const auto& l : labels) {
            Rational w = parse_rational(l.at("weight").get<std::string>());
            m.session.require_weight(w);
            m.labels.push_back({w, l.at("degree").get<int>(), l.value("tag", std::string())});
        }
        const CycloField& f = m.session.field();
        m.E = matrix_from_json(f, j.at("E"), n, "E");
        m.F = matrix_from_json(f, j.at("F"), n, "F");
        m.H = matrix_from_json(f, j.at("H"), n, "H");
        return m;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad module dump: ") + e.what());
    }
}

json certificate_to_json(const ModuleRep& m, const FiltrationCertificate& c) {
    json chain = json::array();
    for (const auto& basis : c.chain) {
        json rows = json::array();
        for (const auto& v : basis) rows.push_back(vector_to_json(v));
        chain.push_back(std::move(rows));
    }
    json claims = json::array();
    for (const auto& q : c.claims) claims.push_back(json{{"kind", to_string(q.kind)}, {"weight", to_string(q.weight)}, {"degree", q.degree}});
    return json{{"module", module_to_json(m)}, {"chain", chain}, {"quotient_claims", claims}};
}

std::pair<ModuleRep, FiltrationCertificate> certificate_from_json(const json& j) {
    try {
        ModuleRep m = module_from_json(j.at("module"));
        FiltrationCertificate c;
        for (const auto& rows : j.at("chain")) {
            std::vector<Vec> basis;
            for (const auto& row : rows) basis.push_back(vector_from_json(m.session.field(), row, m.dim()));
            c.chain.push_back(std::move(basis));
        }
        for (const auto& q : j.at("quotient_claims")) {
            const std::string kind = q.at("kind").get<std::string>();
            if (kind != "verma" && kind != "dual-verma") throw InvalidInput("unknown quotient kind '" + kind + "'");
            c.claims.push_back({kind == "verma" ? QuotientKind::Verma : QuotientKind::DualVerma, parse_rational(q.at("weight").get<std::string>()),
                                q.at("degree").get<int>()});
        }
        return {std::move(m), std::move(c)};
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad certificate: ") + e.what());
    }
}

json report_to_json(const Report& r) {
    json items = json::array();
    for (const auto& it : r.items) {
        json o{{"name", it.name}, {"pass", it.pass}};
        if (!it.witness.empty()) o["witness"] = it.witness;
        items.push_back(std::move(o));
    }
    return json{{"title", r.title}, {"status", r.pass() ? "pass" : "fail"}, {"items", items}, {"seconds", r.seconds}};
}

json bgg_to_json(const BggTable& t) {
    json cells = json::array();
    for (const auto& c : t.cells)
        cells.push_back(json{{"lambda", to_string(c.lambda)}, {"mu", to_string(c.mu)}, {"filtration", c.filtration}, {"jh", c.jh}, {"equal", c.equal()}});
    return json{{"degree", t.m}, {"cells", cells}, {"report", report_to_json(t.report)}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << j.dump(1) << "\n";
}

}  // namespace uqwb
