#ifndef SBCN_TESTS_FIXTURES_HPP
#define SBCN_TESTS_FIXTURES_HPP

#include <vector>

#include "sbcn/dag.hpp"
#include "sbcn/dataset.hpp"

namespace fixtures {

/// 15-node single-root tree used across the suite (14 arcs).
inline std::vector<sbcn::Arc> tree15_edges() {
    return {{0, 1}, {0, 3}, {0, 7}, {0, 13}, {0, 14}, {2, 9},  {4, 8},
            {7, 2}, {11, 5}, {11, 6}, {11, 10}, {11, 12}, {14, 4}, {14, 11}};
}

inline sbcn::Dag tree15() { return sbcn::Dag::from_edges(15, tree15_edges()); }

/// 4 x 2 dataset with columns (0,0,1,1) and (0,0,0,1).
inline sbcn::ObservationMatrix tiny4x2() {
    return sbcn::ObservationMatrix::from_rows({{0, 0}, {0, 0}, {1, 0}, {1, 1}});
}

} // namespace fixtures

#endif
