#include "sbcn/suppes.hpp"

#include <stdexcept>

namespace sbcn {

double marginal(const ObservationMatrix& d, int j) {
    return static_cast<double>(d.column_ones(j)) / d.sample_count();
}

ConstraintMask prima_facie_mask(const ObservationMatrix& d) {
    const int k = d.variable_count();
    const int m = d.sample_count();

    std::vector<int> ones(k);
    for (int j = 0; j < k; ++j) ones[j] = d.column_ones(j);

    // joint[u*k+v] = #rows with u=1 and v=1
    std::vector<int> joint(static_cast<size_t>(k) * k, 0);
    for (int r = 0; r < m; ++r) {
        for (int u = 0; u < k; ++u) {
            if (!d.cell(r, u)) continue;
            for (int v = u + 1; v < k; ++v)
                if (d.cell(r, v)) {
                    ++joint[static_cast<size_t>(u) * k + v];
                    ++joint[static_cast<size_t>(v) * k + u];
                }
        }
    }

    ConstraintMask mask;
    mask.k = k;
    mask.allowed.assign(static_cast<size_t>(k) * k, 0);
    for (int j = 0; j < k; ++j)
        if (ones[j] == 0 || ones[j] == m) mask.degenerate.push_back(j);

    for (int u = 0; u < k; ++u) {
        const int nu = ones[u];
        if (nu == 0 || nu == m) continue;
        for (int v = 0; v < k; ++v) {
            if (u == v) continue;
            const int nv = ones[v];
            if (nv == 0 || nv == m) continue;
            // temporal priority: P(u) > P(v), i.e. count(u) > count(v)
            if (nu <= nv) continue;
            // probability raising: P(v|u) > P(v|not u), cross-multiplied on
            // integer counts (nu and m-nu are nonzero here)
            const long long n11 = joint[static_cast<size_t>(u) * k + v];
            const long long n01 = nv - n11; // v=1, u=0
            if (n11 * (m - nu) > n01 * static_cast<long long>(nu))
                mask.allowed[static_cast<size_t>(u) * k + v] = 1;
        }
    }
    return mask;
}

Dag apply_mask(const Dag& g, const ConstraintMask& mask) {
    if (g.node_count() != mask.k)
        throw std::invalid_argument("apply_mask: graph and mask dimension mismatch");
    Dag out = g;
    for (const auto& [u, v] : g.edges())
        if (!mask.is_allowed(u, v)) out.remove_arc(u, v);
    return out;
}

} // namespace sbcn
