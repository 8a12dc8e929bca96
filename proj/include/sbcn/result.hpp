#ifndef SBCN_RESULT_HPP
#define SBCN_RESULT_HPP

#include <cstdint>
#include <vector>

#include "sbcn/config.hpp"
#include "sbcn/dag.hpp"
#include "sbcn/dataset.hpp"

namespace sbcn {

/// Outcome of one optimization run. score_history holds the best fitness after
/// each generation (length = generations, non-decreasing under elitism).
/// Remote job outcomes reconstructed from the wire carry an empty history.
struct RunResult {
    Dag best;
    double best_score = 0.0;
    std::vector<double> score_history;
    double wall_time_seconds = 0.0;
    uint64_t seed = 0;
    uint64_t config_digest = 0;
};

/// Stable FNV-1a digest of a config + dataset pair, for provenance stamping.
uint64_t config_digest(const GaConfig& config, const ObservationMatrix& d);

} // namespace sbcn

#endif
