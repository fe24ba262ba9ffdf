#include "uqwb/structure.hpp"

#include "uqwb/errors.hpp"
#include "uqwb/repmod.hpp"

namespace uqwb {

namespace {

DenseMatrix<Scalar> shifted_h(const BlockOps& ops, int b) {
    DenseMatrix<Scalar> nil = ops.H[b];
    for (std::size_t k = 0; k < nil.rows(); ++k) nil(k, k) -= Scalar(ops.blocks.weights[b]);
    return nil;
}

Vec mat_vec(const DenseMatrix<Scalar>& a, const Vec& v) {
    Vec out(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) out[i] += a(i, j) * v[j];
    }
    return out;
}

std::vector<WeightedVector> kernel_vectors(const ModuleRep& m, bool dominant) {
    const BlockOps ops = block_ops(m);
    std::vector<WeightedVector> out;
    for (std::size_t b = 0; b < ops.blocks.count(); ++b) {
        const int bi = static_cast<int>(b);
        const std::size_t n = ops.dim(bi);
        DenseMatrix<Scalar> op(0, n);
        if (ops.up[b] >= 0) {
            op = ops.E[b];
            if (dominant) {
                DenseMatrix<Scalar> fe = ops.F[ops.up[b]] * ops.E[b];
                op = fe * fe;
            }
        }
        for (auto& [v, deg] : adapted_kernel(op, shifted_h(ops, bi)))
            out.push_back({embed(ops.blocks, bi, v), ops.blocks.weights[b], deg});
    }
    return out;
}

}  // namespace

std::vector<std::pair<Vec, int>> adapted_kernel(const DenseMatrix<Scalar>& op, const DenseMatrix<Scalar>& nil) {
    const std::size_t n = nil.rows();
    std::vector<Vec> z;
    if (op.rows() == 0) {
        for (std::size_t k = 0; k < n; ++k) {
            Vec e(n);
            e[k] = Scalar(1);
            z.push_back(std::move(e));
        }
    } else {
        z = nullspace(op);
    }
    std::vector<std::pair<Vec, int>> out;
    if (z.empty()) return out;
    Echelon seen(n);
    DenseMatrix<Scalar> power = nil;
    for (int s = 0; seen.rank() < z.size() && s <= static_cast<int>(n); ++s) {
        // coefficients a with power * (sum a_k z_k) = 0
        DenseMatrix<Scalar> pz(n, z.size());
        for (std::size_t k = 0; k < z.size(); ++k) {
            Vec col = mat_vec(power, z[k]);
            for (std::size_t i = 0; i < n; ++i) pz(i, k) = col[i];
        }
        for (const auto& a : nullspace(pz)) {
            Vec v(n);
            for (std::size_t k = 0; k < z.size(); ++k)
                if (!a[k].is_zero())
                    for (std::size_t i = 0; i < n; ++i)
                        if (!z[k][i].is_zero()) v[i] += a[k] * z[k][i];
            if (seen.insert(v)) out.emplace_back(std::move(v), s);
        }
        power = power * nil;
    }
    return out;
}

std::vector<WeightedVector> highest_weight_vectors(const ModuleRep& m) { return kernel_vectors(m, false); }

std::vector<WeightedVector> dominant_vectors(const ModuleRep& m) { return kernel_vectors(m, true); }

Vec random_combination(std::mt19937_64& rng, const std::vector<Vec>& vectors) {
    std::uniform_int_distribution<long> coef(1, 64);
    Vec out(vectors.empty() ? 0 : vectors[0].size());
    for (const auto& v : vectors) {
        Scalar c(coef(rng));
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) out[i] += c * v[i];
    }
    return out;
}

namespace {

IsoResult none(std::string why) { return IsoResult{std::nullopt, std::move(why)}; }

// Parametric image of one spanning vector: column j is its image when the
// j-th unknown is 1 and the others are 0.
struct Tracked {
    int block;
    Vec raw;
    DenseMatrix<Scalar> image;
};

bool full_rank_at(const DenseMatrix<Scalar>& x, const Rational& t0) {
    DenseMatrix<CycloNum> s(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (!x(i, j).is_zero()) s(i, j) = x(i, j).specialize(t0);
    return rank(s) == x.rows();
}

}  // namespace

IsoResult iso_test(const ModuleRep& a, const ModuleRep& b, std::uint64_t seed) {
    if (a.dim() != b.dim()) return none("dimension mismatch");
    const BlockOps oa = block_ops(a);
    const BlockOps ob = block_ops(b);
    if (oa.blocks.weights != ob.blocks.weights) return none("weight supports differ");
    const std::size_t nb = oa.blocks.count();
    for (std::size_t k = 0; k < nb; ++k)
        if (oa.dim(static_cast<int>(k)) != ob.dim(static_cast<int>(k))) return none("weight multiplicities differ");
    if (a.E == b.E && a.F == b.F && a.H == b.H) return IsoResult{SparseMatrix::identity(a.dim()), "identical matrices"};

    std::mt19937_64 rng(seed);

    // A generating set of a, highest weights first.
    std::vector<std::pair<int, Vec>> gens;
    {
        Subspace s(oa.blocks);
        for (std::size_t k = 0; k < nb; ++k) {
            const int bk = static_cast<int>(k);
            while (s.part(bk).rank() < oa.dim(bk)) {
                std::vector<Vec> free;
                for (std::size_t f : s.part(bk).free_columns()) {
                    Vec e(oa.dim(bk));
                    e[f] = Scalar(1);
                    free.push_back(std::move(e));
                }
                Vec v = random_combination(rng, free);
                gens.emplace_back(bk, v);
                saturate(oa, s, {{bk, v}});
            }
        }
    }

    // Unknowns: the coordinates of each generator's image in b.
    std::vector<std::size_t> first_unknown;
    std::size_t n_unknowns = 0;
    for (const auto& g : gens) {
        first_unknown.push_back(n_unknowns);
        n_unknowns += ob.dim(g.first);
    }

    // Spanning vectors of a with images, obtained by re-running the saturation.
    std::vector<Echelon> seen;
    for (std::size_t k = 0; k < nb; ++k) seen.emplace_back(oa.dim(static_cast<int>(k)));
    std::vector<std::vector<Tracked>> span(nb);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& [gb, gv] = gens[gi];
        DenseMatrix<Scalar> img(ob.dim(gb), n_unknowns);
        for (std::size_t k = 0; k < ob.dim(gb); ++k) img(k, first_unknown[gi] + k) = Scalar(1);
        if (!seen[gb].insert(gv)) continue;
        std::vector<Tracked> queue{{gb, gv, img}};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Tracked cur = queue[head];
            span[cur.block].push_back(cur);
            for (int g = 0; g < 3; ++g) {
                int t;
                Vec w = oa.apply(g, cur.block, cur.raw, t);
                if (t < 0 || is_zero(w) || !seen[t].insert(w)) continue;
                const DenseMatrix<Scalar>& opb = g == 0 ? ob.E[cur.block] : g == 1 ? ob.F[cur.block] : ob.H[cur.block];
                queue.push_back({t, std::move(w), opb * cur.image});
            }
        }
    }

    // X_b^(j) = Image_b^(j) * Raw_b^-1 for every block and unknown.
    std::vector<std::vector<DenseMatrix<Scalar>>> xs(nb);
    for (std::size_t k = 0; k < nb; ++k) {
        const std::size_t d = oa.dim(static_cast<int>(k));
        if (span[k].size() != d) throw SearchFailure("iso_test: spanning set incomplete");
        DenseMatrix<Scalar> raw(d, d);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t i = 0; i < d; ++i) raw(i, c) = span[k][c].raw[i];
        auto rinv = inverse(raw);
        if (!rinv) throw SearchFailure("iso_test: spanning set not invertible");
        for (std::size_t j = 0; j < n_unknowns; ++j) {
            DenseMatrix<Scalar> img(d, d);
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t i = 0; i < d; ++i) img(i, c) = span[k][c].image(i, j);
            xs[k].push_back(img * *rinv);
        }
    }

    // Intertwining equations, linear in the unknowns.
    Echelon eqs(n_unknowns);
    auto add_equations = [&](const std::vector<DenseMatrix<Scalar>>& per_unknown) {
        const std::size_t rows = per_unknown[0].rows(), cols = per_unknown[0].cols();
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < cols; ++c) {
                if (eqs.rank() == n_unknowns) return;
                Vec row(n_unknowns);
                bool any = false;
                for (std::size_t j = 0; j < n_unknowns; ++j) {
                    row[j] = per_unknown[j](i, c);
                    any = any || !row[j].is_zero();
                }
                if (any) eqs.insert(row);
            }
    };
    for (std::size_t k = 0; k < nb && eqs.rank() < n_unknowns; ++k) {
        const int u = oa.up[k], dn = oa.down[k];
        std::vector<DenseMatrix<Scalar>> d;
        if (u >= 0) {
            d.clear();
            for (std::size_t j = 0; j < n_unknowns; ++j) {
                DenseMatrix<Scalar> lhs = xs[u][j] * oa.E[k];
                DenseMatrix<Scalar> rhs = ob.E[k] * xs[k][j];
                for (std::size_t i = 0; i < lhs.rows(); ++i)
                    for (std::size_t c = 0; c < lhs.cols(); ++c) lhs(i, c) -= rhs(i, c);
                d.push_back(std::move(lhs));
            }
            add_equations(d);
        }
        if (dn >= 0) {
            d.clear();
            for (std::size_t j = 0; j < n_unknowns; ++j) {
                DenseMatrix<Scalar> lhs = xs[dn][j] * oa.F[k];
                DenseMatrix<Scalar> rhs = ob.F[k] * xs[k][j];
                for (std::size_t i = 0; i < lhs.rows(); ++i)
                    for (std::size_t c = 0; c < lhs.cols(); ++c) lhs(i, c) -= rhs(i, c);
                d.push_back(std::move(lhs));
            }
            add_equations(d);
        }
        d.clear();
        for (std::size_t j = 0; j < n_unknowns; ++j) {
            DenseMatrix<Scalar> lhs = xs[k][j] * oa.H[k];
            DenseMatrix<Scalar> rhs = ob.H[k] * xs[k][j];
            for (std::size_t i = 0; i < lhs.rows(); ++i)
                for (std::size_t c = 0; c < lhs.cols(); ++c) lhs(i, c) -= rhs(i, c);
            d.push_back(std::move(lhs));
        }
        add_equations(d);
    }
    const std::vector<Vec> homs = eqs.orthogonal_complement();
    if (homs.empty()) return none("no nonzero homomorphism");

    std::uniform_int_distribution<long> tau_pick(1, 1000000);
    for (int attempt = 0; attempt < 3; ++attempt) {
        Vec c = random_combination(rng, homs);
        std::vector<DenseMatrix<Scalar>> x(nb);
        for (std::size_t k = 0; k < nb; ++k) {
            const std::size_t d = oa.dim(static_cast<int>(k));
            x[k] = DenseMatrix<Scalar>(d, d);
            for (std::size_t j = 0; j < n_unknowns; ++j) {
                if (c[j].is_zero()) continue;
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t l = 0; l < d; ++l)
                        if (!xs[k][j](i, l).is_zero()) x[k](i, l) += c[j] * xs[k][j](i, l);
            }
        }
        bool invertible = true;
        try {
            Rational t0(tau_pick(rng));
            for (std::size_t k = 0; k < nb && invertible; ++k) invertible = full_rank_at(x[k], t0);
        } catch (const PoleError&) {
            invertible = false;
        }
        if (!invertible) continue;
        SparseMatrix full(b.dim(), a.dim());
        for (std::size_t k = 0; k < nb; ++k) {
            const auto& rows = ob.blocks.members[k];
            const auto& cols = oa.blocks.members[k];
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t l = 0; l < cols.size(); ++l)
                    if (!x[k](i, l).is_zero()) full.set(rows[i], cols[l], x[k](i, l));
        }
        if (!(full * a.E == b.E * full && full * a.F == b.F * full && full * a.H == b.H * full))
            throw SearchFailure("iso_test: solved intertwiner failed exact re-check");
        return IsoResult{std::move(full), "certified (" + std::to_string(homs.size()) + "-dim Hom)"};
    }
    return none("no iso found (randomized)");
}

bool is_generalized_verma(const ModuleRep& m, const Rational& lambda, int deg, std::uint64_t seed) {
    if (m.dim() != static_cast<std::size_t>((deg + 1) * m.session.r())) return false;
    const BlockOps ops = block_ops(m);
    const int b = ops.blocks.find(lambda);
    if (b < 0) return false;
    DenseMatrix<Scalar> op(0, ops.dim(b));
    if (ops.up[b] >= 0) op = ops.E[b];
    std::vector<Vec> top, all;
    for (auto& [v, s] : adapted_kernel(op, shifted_h(ops, b))) {
        if (s > deg) continue;
        all.push_back(v);
        if (s == deg) top.push_back(v);
    }
    if (top.empty()) return false;
    std::mt19937_64 rng(seed);
    std::vector<Vec> candidates = top;
    if (all.size() > 1) candidates.push_back(random_combination(rng, all));
    for (const auto& v : candidates) {
        Subspace s(ops.blocks);
        saturate(ops, s, {{b, v}});
        if (s.dim() == m.dim()) return true;
    }
    return false;
}

bool is_generalized_verma_by_iso(const ModuleRep& m, const Rational& lambda, int deg, std::uint64_t seed) {
    if (!m.session.weight_allowed(lambda) || deg < 0) return false;
    return iso_test(m, build_generalized_verma(m.session, lambda, deg), seed).found();
}

}  // namespace uqwb
