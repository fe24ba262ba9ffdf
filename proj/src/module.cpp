#include "uqwb/module.hpp"

#include <algorithm>
#include <map>

namespace uqwb {

int WeightBlocks::find(const Rational& w) const {
    auto it = std::lower_bound(weights.begin(), weights.end(), w, [](const Rational& a, const Rational& b) { return a > b; });
    return it != weights.end() && *it == w ? static_cast<int>(it - weights.begin()) : -1;
}

WeightBlocks weight_blocks(const ModuleRep& m) {
    std::map<Rational, std::vector<std::size_t>, std::greater<>> by_weight;
    for (std::size_t i = 0; i < m.dim(); ++i) by_weight[m.labels[i].weight].push_back(i);
    WeightBlocks b;
    b.block_of.assign(m.dim(), -1);
    b.offset.assign(m.dim(), 0);
    for (auto& [w, idx] : by_weight) {
        int id = static_cast<int>(b.weights.size());
        for (std::size_t k = 0; k < idx.size(); ++k) {
            b.block_of[idx[k]] = id;
            b.offset[idx[k]] = k;
        }
        b.weights.push_back(w);
        b.members.push_back(std::move(idx));
    }
    return b;
}

int vector_degree(const ModuleRep& m, const Vec& v, const Rational& w) {
    Vec cur = v;
    Scalar shift(-w);
    for (int s = -1; s <= static_cast<int>(m.dim()); ++s) {
        if (is_zero(cur)) return s;
        Vec next = m.H.apply(cur);
        for (std::size_t i = 0; i < next.size(); ++i)
            if (!cur[i].is_zero()) next[i] += shift * cur[i];
        cur = std::move(next);
    }
    return static_cast<int>(m.dim());
}

void relabel_degrees(ModuleRep& m) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Vec e(m.dim());
        e[i] = Scalar(1);
        m.labels[i].degree = std::max(0, vector_degree(m, e, m.labels[i].weight));
    }
}

}  // namespace uqwb
