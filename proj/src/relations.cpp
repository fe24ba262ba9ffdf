#include "uqwb/relations.hpp"

#include "uqwb/errors.hpp"
#include "uqwb/repmod.hpp"

namespace uqwb {

namespace {

SparseMatrix power(const SparseMatrix& a, int n) {
    SparseMatrix p = SparseMatrix::identity(a.rows());
    for (int k = 0; k < n && !p.is_zero(); ++k) p = p * a;
    return p;
}

void expect_equal(Report& rep, const std::string& name, const SparseMatrix& lhs, const SparseMatrix& rhs) {
    std::string diff = SparseMatrix::first_difference(lhs, rhs);
    rep.add(name, diff.empty(), diff);
}

std::string shift_violation(const ModuleRep& m, const SparseMatrix& x, int shift) {
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (const auto& [j, v] : x.row(i))
            if (m.labels[i].weight != m.labels[j].weight + shift)
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") joins weights " +
                       m.labels[j].weight.get_str() + " -> " + m.labels[i].weight.get_str();
    return "";
}

}  // namespace

bool k_matches_exponential(const ModuleRep& m, std::string* witness) {
    KPair k = derive_K_unchecked(m);
    const auto blocks = weight_blocks(m);
    SparseMatrix kref(m.dim(), m.dim()), kiref(m.dim(), m.dim());
    for (std::size_t b = 0; b < blocks.count(); ++b) {
        const auto& idx = blocks.members[b];
        const Rational& w = blocks.weights[b];
        const std::size_t n = idx.size();
        DenseMatrix<Scalar> nil = m.H.block(idx, idx);
        for (std::size_t a = 0; a < n; ++a) nil(a, a) -= Scalar(w);
        for (int sign : {+1, -1}) {
            DenseMatrix<Scalar> acc = DenseMatrix<Scalar>::identity(n);
            for (int s = static_cast<int>(n); s >= 1; --s) {
                Scalar ratio = m.session.degree_drop_coeff(s) / m.session.degree_drop_coeff(s - 1);
                if (sign < 0) ratio = -ratio;
                DenseMatrix<Scalar> step = nil * acc;
                acc = DenseMatrix<Scalar>::identity(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (!step(i, j).is_zero()) acc(i, j) += ratio * step(i, j);
            }
            Scalar qw(m.session.q_power(sign > 0 ? w : Rational(-w)));
            SparseMatrix& target = sign > 0 ? kref : kiref;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!acc(i, j).is_zero()) target.set(idx[i], idx[j], qw * acc(i, j));
        }
    }
    std::string d = SparseMatrix::first_difference(k.K, kref);
    if (d.empty()) d = SparseMatrix::first_difference(k.Kinv, kiref);
    if (witness) *witness = d;
    return d.empty();
}

Report verify_relations(const ModuleRep& m) {
    Report rep;
    rep.title = "relations (dim " + std::to_string(m.dim()) + ")";
    const Session& s = m.session;
    const auto id = SparseMatrix::identity(m.dim());

    try {
        weight_decomposition(m);
        rep.add("generalized weight blocks", true);
    } catch (const ModuleInvalid& e) {
        rep.add("generalized weight blocks", false, e.what());
    }
    std::string v = shift_violation(m, m.E, 2);
    rep.add("E raises weight by 2", v.empty(), v);
    v = shift_violation(m, m.F, -2);
    rep.add("F lowers weight by 2", v.empty(), v);

    expect_equal(rep, "[H,E] = 2E", m.H * m.E - m.E * m.H, Scalar(2) * m.E);
    expect_equal(rep, "[H,F] = -2F", m.H * m.F - m.F * m.H, Scalar(-2) * m.F);
    expect_equal(rep, "E^r = 0", power(m.E, s.r()), SparseMatrix(m.dim(), m.dim()));
    expect_equal(rep, "F^r = 0", power(m.F, s.r()), SparseMatrix(m.dim(), m.dim()));

    KPair k;
    try {
        k = derive_K(m);
        rep.add("K derivation", true);
    } catch (const ModeUnsupported& e) {
        rep.add("K derivation", false, std::string("mode-unsupported: ") + e.what());
        return rep;
    }
    expect_equal(rep, "K Kinv = 1", k.K * k.Kinv, id);
    expect_equal(rep, "Kinv K = 1", k.Kinv * k.K, id);
    Scalar q2(s.q_power(2L)), qm2(s.q_power(-2L));
    expect_equal(rep, "KE = q^2 EK", k.K * m.E, q2 * (m.E * k.K));
    expect_equal(rep, "KF = q^-2 FK", k.K * m.F, qm2 * (m.F * k.K));
    expect_equal(rep, "[E,F] = (K - Kinv)/(q - q^-1)", m.E * m.F - m.F * m.E, Scalar(s.inv_q_diff()) * (k.K - k.Kinv));
    expect_equal(rep, "HK = KH", m.H * k.K, k.K * m.H);
    std::string w;
    bool ok = k_matches_exponential(m, &w);
    rep.add("K = q^H blockwise", ok, w);
    return rep;
}

}  // namespace uqwb
