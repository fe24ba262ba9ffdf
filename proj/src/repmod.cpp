#include "uqwb/repmod.hpp"

#include "uqwb/algebra.hpp"
#include "uqwb/errors.hpp"

namespace uqwb {

ModuleRep build_one_dim(const Session& s, long k) {
    ModuleRep m;
    m.session = s;
    Rational w = s.half_ell() * k;
    s.require_weight(w);
    m.labels.push_back({w, 0, "c"});
    m.E = SparseMatrix(1, 1);
    m.F = SparseMatrix(1, 1);
    m.H = SparseMatrix(1, 1);
    m.H.set(0, 0, Scalar(w));
    return m;
}

ModuleRep build_simple(const Session& s, int i) {
    if (i < 0 || i > s.r() - 2)
        throw InvalidInput("simple index i = " + std::to_string(i) + " outside 0.." + std::to_string(s.r() - 2));
    ModuleRep m;
    m.session = s;
    const std::size_t n = i + 1;
    m.E = SparseMatrix(n, n);
    m.F = SparseMatrix(n, n);
    m.H = SparseMatrix(n, n);
    for (int k = 0; k <= i; ++k) {
        m.labels.push_back({Rational(i - 2 * k), 0, "s_" + std::to_string(k)});
        m.H.set(k, k, Scalar(i - 2 * k));
        if (k < i) m.F.set(k + 1, k, Scalar(1));
        if (k > 0) m.E.set(k - 1, k, Scalar(s.quantum_integer(k) * s.quantum_integer(i + 1 - k)));
    }
    return m;
}

DenseMatrix<Scalar> k_block(const Session& s, const Rational& w, const DenseMatrix<Scalar>& nil, int sign) {
    const std::size_t n = nil.rows();
    DenseMatrix<Scalar> acc = DenseMatrix<Scalar>::identity(n);
    DenseMatrix<Scalar> power = DenseMatrix<Scalar>::identity(n);
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        power = power * nil;
        bool zero = true;
        for (std::size_t i = 0; i < n && zero; ++i)
            for (std::size_t j = 0; j < n && zero; ++j)
                if (!power(i, j).is_zero()) zero = false;
        if (zero) break;
        Scalar c = s.degree_drop_coeff(k);
        if (sign < 0 && k % 2 == 1) c = -c;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!power(i, j).is_zero()) acc(i, j) += c * power(i, j);
    }
    Scalar qw(s.q_power(sign > 0 ? w : Rational(-w)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!acc(i, j).is_zero()) acc(i, j) = qw * acc(i, j);
    return acc;
}

namespace {

DenseMatrix<Scalar> nilpotent_part(const ModuleRep& m, const std::vector<std::size_t>& idx, const Rational& w) {
    DenseMatrix<Scalar> nil = m.H.block(idx, idx);
    for (std::size_t k = 0; k < idx.size(); ++k) nil(k, k) -= Scalar(w);
    return nil;
}

bool square_is_zero(const DenseMatrix<Scalar>& a) {
    DenseMatrix<Scalar> sq = a * a;
    for (std::size_t i = 0; i < sq.rows(); ++i)
        for (std::size_t j = 0; j < sq.cols(); ++j)
            if (!sq(i, j).is_zero()) return false;
    return true;
}

KPair derive_K_impl(const ModuleRep& m, bool guard) {
    const auto blocks = weight_blocks(m);
    KPair k{SparseMatrix(m.dim(), m.dim()), SparseMatrix(m.dim(), m.dim())};
    for (std::size_t b = 0; b < blocks.count(); ++b) {
        const auto& idx = blocks.members[b];
        DenseMatrix<Scalar> nil = nilpotent_part(m, idx, blocks.weights[b]);
        if (guard && m.session.mode() == CoeffMode::PaperLiteral && !square_is_zero(nil))
            throw ModeUnsupported("paper-literal K coefficients (tau^s without 1/s!) break K K^-1 = 1 on the degree >= 2 block at weight " +
                                  blocks.weights[b].get_str() + "; use exponential mode");
        auto kp = k_block(m.session, blocks.weights[b], nil, +1);
        auto km = k_block(m.session, blocks.weights[b], nil, -1);
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t c = 0; c < idx.size(); ++c) {
                if (!kp(a, c).is_zero()) k.K.set(idx[a], idx[c], kp(a, c));
                if (!km(a, c).is_zero()) k.Kinv.set(idx[a], idx[c], km(a, c));
            }
    }
    return k;
}

}  // namespace

KPair derive_K(const ModuleRep& m) { return derive_K_impl(m, true); }

KPair derive_K_unchecked(const ModuleRep& m) { return derive_K_impl(m, false); }

ModuleRep build_generalized_verma(const Session& s, const Rational& lambda, int m) {
    s.require_weight(lambda);
    if (m < 0) throw InvalidInput("degree must be non-negative");
    const int r = s.r();
    const std::size_t chain = m + 1;
    const std::size_t n = chain * r;
    ModuleRep v;
    v.session = s;
    v.max_degree = m;
    v.E = SparseMatrix(n, n);
    v.F = SparseMatrix(n, n);
    v.H = SparseMatrix(n, n);
    auto index = [&](int t, int k) { return static_cast<std::size_t>(t) * chain + k; };
    for (int t = 0; t < r; ++t)
        for (int k = 0; k <= m; ++k) {
            v.labels.push_back({lambda - 2 * t, k, "F^" + std::to_string(t) + " v^" + std::to_string(k)});
            v.H.set(index(t, k), index(t, k), Scalar(Rational(lambda - 2 * t)));
            if (k > 0) v.H.set(index(t, k - 1), index(t, k), Scalar(1));
            if (t + 1 < r) v.F.set(index(t + 1, k), index(t, k), Scalar(1));
        }

    // The top chain C_lambda^m: H = lambda + N with N v^k = v^{k-1}, K = q^H.
    DenseMatrix<Scalar> nil(chain, chain);
    for (std::size_t k = 1; k < chain; ++k) nil(k - 1, k) = Scalar(1);
    DenseMatrix<Scalar> hc = nil;
    for (std::size_t k = 0; k < chain; ++k) hc(k, k) = Scalar(lambda);
    const DenseMatrix<Scalar> kc = k_block(s, lambda, nil, +1);
    const DenseMatrix<Scalar> kci = k_block(s, lambda, nil, -1);

    for (int t = 1; t < r; ++t) {
        Word w{Gen::E};
        w.insert(w.end(), t, Gen::F);
        for (const auto& [mono, coef] : pbw_coefficients(s, AlgebraElement::word(w))) {
            if (mono.b > 0) continue;  // E kills the top chain
            DenseMatrix<Scalar> op = DenseMatrix<Scalar>::identity(chain);
            for (int d = 0; d < mono.d; ++d) op = hc * op;
            for (int c = 0; c < std::abs(mono.c); ++c) op = (mono.c > 0 ? kc : kci) * op;
            for (int k = 0; k <= m; ++k)
                for (int k2 = 0; k2 <= m; ++k2)
                    if (!op(k2, k).is_zero()) v.E.add_to(index(mono.a, k2), index(t, k), coef * op(k2, k));
        }
    }
    return v;
}

ModuleRep build_dual(const ModuleRep& m) {
    KPair k = derive_K(m);
    ModuleRep d;
    d.session = m.session;
    d.max_degree = m.max_degree;
    d.labels = m.labels;
    for (auto& l : d.labels) l.tag += "*";
    d.E = Scalar(-1) * (k.K * m.F).transpose();
    d.F = Scalar(-1) * (m.E * k.Kinv).transpose();
    d.H = m.H.transpose();
    relabel_degrees(d);
    return d;
}

ModuleRep build_tensor(const ModuleRep& a, const ModuleRep& b) {
    if (!(a.session == b.session)) throw InvalidInput("tensor factors come from different sessions");
    KPair ka = derive_K(a);
    KPair kb = derive_K(b);
    const auto ia = SparseMatrix::identity(a.dim());
    const auto ib = SparseMatrix::identity(b.dim());
    ModuleRep t;
    t.session = a.session;
    t.max_degree = a.max_degree + b.max_degree;
    for (const auto& la : a.labels)
        for (const auto& lb : b.labels)
            t.labels.push_back({la.weight + lb.weight, la.degree + lb.degree, la.tag + " (x) " + lb.tag});
    t.E = SparseMatrix::kron(ia, b.E) + SparseMatrix::kron(a.E, kb.K);
    t.F = SparseMatrix::kron(ka.Kinv, b.F) + SparseMatrix::kron(a.F, ib);
    t.H = SparseMatrix::kron(ia, b.H) + SparseMatrix::kron(a.H, ib);
    return t;
}

namespace {

SparseMatrix block_diagonal(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) out.set_row(i, a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) {
        auto row = b.row(i);
        for (auto& e : row) e.first += a.cols();
        out.set_row(a.rows() + i, std::move(row));
    }
    return out;
}

}  // namespace

ModuleRep build_direct_sum(const ModuleRep& a, const ModuleRep& b) {
    if (!(a.session == b.session)) throw InvalidInput("summands come from different sessions");
    ModuleRep s;
    s.session = a.session;
    s.max_degree = std::max(a.max_degree, b.max_degree);
    s.labels = a.labels;
    s.labels.insert(s.labels.end(), b.labels.begin(), b.labels.end());
    s.E = block_diagonal(a.E, b.E);
    s.F = block_diagonal(a.F, b.F);
    s.H = block_diagonal(a.H, b.H);
    return s;
}

ModuleRep build_twist(const ModuleRep& m, long k) {
    ModuleRep t = build_tensor(m, build_one_dim(m.session, k));
    for (std::size_t i = 0; i < t.dim(); ++i) t.labels[i].tag = m.labels[i].tag;
    return t;
}

std::vector<WeightSpace> weight_decomposition(const ModuleRep& m) {
    const auto blocks = weight_blocks(m);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (const auto& [j, v] : m.H.row(i))
            if (blocks.block_of[i] != blocks.block_of[j])
                throw ModuleInvalid("H mixes the weight blocks of basis vectors " + std::to_string(j) + " and " + std::to_string(i));
    std::vector<WeightSpace> out;
    for (std::size_t b = 0; b < blocks.count(); ++b) {
        const Rational& w = blocks.weights[b];
        if (!m.session.weight_allowed(w)) throw ModuleInvalid("generalized eigenvalue " + w.get_str() + " outside (1/N)Z");
        const auto& idx = blocks.members[b];
        DenseMatrix<Scalar> nil = nilpotent_part(m, idx, w);
        DenseMatrix<Scalar> power = nil;
        int degree = 0;
        for (;; ++degree) {
            bool zero = true;
            for (std::size_t i = 0; i < power.rows() && zero; ++i)
                for (std::size_t j = 0; j < power.cols() && zero; ++j)
                    if (!power(i, j).is_zero()) zero = false;
            if (zero) break;
            if (degree >= static_cast<int>(idx.size()))
                throw ModuleInvalid("H - " + w.get_str() + " is not nilpotent on its block: eigenvalue differs from the label");
            power = power * nil;
        }
        if (degree > m.max_degree)
            throw ModuleInvalid("block at weight " + w.get_str() + " has degree " + std::to_string(degree) +
                                " above the declared maximum " + std::to_string(m.max_degree));
        out.push_back({w, idx.size(), degree, idx});
    }
    return out;
}

}  // namespace uqwb
