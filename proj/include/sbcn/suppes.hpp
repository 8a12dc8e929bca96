#ifndef SBCN_SUPPES_HPP
#define SBCN_SUPPES_HPP

#include <cstdint>
#include <vector>

#include "sbcn/dag.hpp"
#include "sbcn/dataset.hpp"

namespace sbcn {

// Prima-facie admissibility of arcs: temporal priority (higher marginal
// frequency, the surrogate for "occurs earlier" under cumulative mutation
// dynamics) plus probability raising P(v|u) > P(v|not u). Both inequalities
// are strict and evaluated on integer counts, so exact ties disallow the arc
// in both directions. Variables with marginal 0 or 1 are flagged degenerate
// and excluded from all arcs.
struct ConstraintMask {
    int k = 0;
    std::vector<uint8_t> allowed;  // k*k, row-major like Dag
    std::vector<int> degenerate;   // ascending variable indices

    bool is_allowed(int u, int v) const { return allowed[static_cast<size_t>(u) * k + v] != 0; }
};

/// Fraction of ones in column j.
double marginal(const ObservationMatrix& d, int j);

ConstraintMask prima_facie_mask(const ObservationMatrix& d);

/// Clears every arc the mask forbids. Idempotent; never adds arcs.
Dag apply_mask(const Dag& g, const ConstraintMask& mask);

} // namespace sbcn

#endif
