#ifndef SBCN_DATAGEN_HPP
#define SBCN_DATAGEN_HPP

#include <cstdint>
#include <vector>

#include "sbcn/dag.hpp"
#include "sbcn/dataset.hpp"
#include "sbcn/rng.hpp"
#include "sbcn/scoring.hpp"

namespace sbcn {

/// Sampling ranges for generative CPTs. Defaults give detectable but
/// non-trivial signal at M = 100; override from config to retune benchmarks
/// without touching code.
struct CptRanges {
    double root_min = 0.3, root_max = 0.7;    // P(1) of parentless nodes
    double low_min = 0.01, low_max = 0.15;    // P(1 | parent absent)
    double high_min = 0.5, high_max = 0.95;   // P(1 | parent present)
};

/// Ground-truth model: structure plus CPTs where the probability of a node is
/// strictly increasing in the number of active parents (positive dependency).
struct GenerativeModel {
    Dag structure;
    std::vector<Cpt> cpts; // indexed by node
};

/// Random labelled rooted tree: uniform permutation, each node attaches to a
/// uniformly chosen earlier one. k-1 arcs, in-degree <= 1, connected.
Dag random_tree(int k, Rng& rng);

/// Forest variant: after the root, each node independently becomes a new root
/// with probability 1/k instead of attaching.
Dag random_forest(int k, Rng& rng);

/// Positive-dependency CPTs for an acyclic structure. Multi-parent tables are
/// sorted so entries increase strictly with the parent-configuration popcount.
GenerativeModel sample_cpts(const Dag& g, Rng& rng, const CptRanges& ranges = {});

/// m rows sampled in topological order, each node Bernoulli given its parents.
ObservationMatrix forward_sample(const GenerativeModel& model, int m, Rng& rng);

/// Flips each cell independently with probability epsilon in [0, 0.5].
ObservationMatrix inject_noise(const ObservationMatrix& d, double epsilon, Rng& rng);

/// Exact-count variant: flips round(epsilon * M * K) distinct cells.
ObservationMatrix inject_noise_exact(const ObservationMatrix& d, double epsilon, Rng& rng);

struct BenchmarkInstance {
    GenerativeModel model;
    ObservationMatrix data; // noise-injected
    double noise = 0.0;
    int level = 0;      // index into the noise-level list
    int index = 0;      // instance index within its level
    uint64_t seed = 0;  // stream seed the instance was generated from
};

/// Seed of benchmark instance n under a master seed (splittable scheme).
uint64_t instance_seed(uint64_t master_seed, int instance_index);

/// trees_per_level independent (tree, CPTs, sampled matrix, noise) instances
/// per noise level. Reference protocol: 40 per level, k=15, m=100,
/// levels {0, .05, .10, .15, .20}. forest swaps the tree generator for
/// random_forest.
std::vector<BenchmarkInstance> benchmark_suite(int trees_per_level, int k, int m,
                                               const std::vector<double>& noise_levels,
                                               uint64_t master_seed, const CptRanges& ranges = {},
                                               bool forest = false);

} // namespace sbcn

#endif
