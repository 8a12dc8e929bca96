#ifndef SBCN_GA_HPP
#define SBCN_GA_HPP

#include <utility>
#include <vector>

#include "sbcn/config.hpp"
#include "sbcn/dataset.hpp"
#include "sbcn/population.hpp"
#include "sbcn/result.hpp"
#include "sbcn/rng.hpp"
#include "sbcn/scoring.hpp"
#include "sbcn/suppes.hpp"
#include "sbcn/thread_pool.hpp"

namespace sbcn {

// Elitist genetic algorithm over linearized adjacency-matrix genotypes.
//
// One generation: ranking selection (with replacement), one-point crossover on
// consecutive pairs, per-bit mutation, acyclicity repair, fitness evaluation
// of the offspring, then elitist replacement (best Q of parents + offspring,
// ties favouring incumbents). Offspring pairs are produced and scored
// concurrently, each pair on its own RNG stream derived from the master
// stream, so results are identical for any worker count.

/// Q genomes drawn by setting each mask-allowed off-diagonal bit with
/// probability 2/K, then repairing to acyclicity. All unevaluated.
Population initialize(const GaConfig& config, int k, const ConstraintMask* mask, Rng& rng);

/// Q draws with replacement; individual of rank r (worst = 1, best = Q, ties
/// by stable order) is picked with probability 2r / (Q (Q + 1)).
std::vector<Individual> rank_select(const Population& pop, Rng& rng);

/// Deterministic one-point crossover at the given cut in {0, ..., K*K}.
std::pair<Individual, Individual> crossover_at(const Individual& a, const Individual& b, int cut);

/// Crossover at a uniformly drawn cut; boundary cuts copy the parents.
std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, Rng& rng);

/// Flips each off-diagonal bit independently with probability p_m. The result
/// is not yet repaired.
Individual mutate(const Individual& ind, double p_m, Rng& rng);

/// Clears mask-forbidden bits, then removes one uniformly chosen arc from some
/// detected cycle until acyclic. Never adds arcs; drops any cached fitness.
Individual repair(const Individual& ind, const ConstraintMask* mask, Rng& rng);

/// Scores every individual. Results do not depend on the worker count.
void evaluate(Population& pop, const ObservationMatrix& d, const GaConfig& config,
              ThreadPool* pool = nullptr);

/// One full generation; pop must be evaluated.
Population step(const Population& pop, const ObservationMatrix& d, const GaConfig& config,
                const ConstraintMask* mask, Rng& rng, ThreadPool* pool = nullptr);

/// Full optimization: builds the Suppes mask when configured, initializes,
/// runs config.generations steps. Deterministic given (seed, config, data);
/// threads = 0 uses all hardware workers.
RunResult run(const GaConfig& config, const ObservationMatrix& d, int threads = 0);

namespace detail {
/// Engine step shared by step() and run(); exposed for internal reuse.
Population step_impl(const Population& pop, const Scorer& scorer, const GaConfig& config,
                     const ConstraintMask* mask, Rng& rng, ThreadPool* pool);
} // namespace detail

} // namespace sbcn

#endif
