#ifndef SBCN_SCORING_HPP
#define SBCN_SCORING_HPP

#include <vector>

#include "sbcn/config.hpp"
#include "sbcn/dag.hpp"
#include "sbcn/dataset.hpp"

namespace sbcn {

/// Conditional probability table of one node. Entry c is
/// P(node = 1 | parent configuration c) where bit t of c carries the value of
/// parents[t]. A configuration never seen in the data gets 0.5.
struct Cpt {
    int node = 0;
    std::vector<int> parents;
    std::vector<double> table; // 2^|parents| entries
};

struct ScoreBreakdown {
    double log_likelihood = 0.0;
    long long dimension = 0;
    double penalty = 0.0;
    double total = 0.0; // log_likelihood - penalty; higher is better
};

/// Maximum-likelihood CPTs: entry = N(node=1, config) / N(config).
std::vector<Cpt> fit_parameters(const Dag& g, const ObservationMatrix& d);

/// Log-likelihood of the data under the MLE parameters, natural log:
/// sum over nodes, parent configs c and values v of N_cv * ln(N_cv / N_c),
/// with 0 * ln 0 = 0. Always <= 0.
double log_likelihood(const Dag& g, const ObservationMatrix& d);

/// Contribution of a single family (node given parent set) to the
/// log-likelihood. The total decomposes as the sum over nodes.
double family_log_likelihood(const ObservationMatrix& d, int node,
                             const std::vector<int>& parents);

/// Number of free CPT parameters: sum over nodes of 2^|parents|.
long long dimension(const Dag& g);

/// BIC: LL - (ln M / 2) * dim.  AIC: LL - dim.
ScoreBreakdown score(const Dag& g, const ObservationMatrix& d, Regularizer regularizer);

// Binds a dataset + regularizer for repeated scoring (the GA hot path).
// Pure with respect to the graph argument; a const Scorer is safe to share
// across threads.
class Scorer {
public:
    Scorer(const ObservationMatrix& d, Regularizer regularizer);

    ScoreBreakdown operator()(const Dag& g) const;
    double family_ll(int node, const std::vector<int>& parents) const;

    const ObservationMatrix& data() const { return *data_; }
    Regularizer regularizer() const { return regularizer_; }

private:
    const ObservationMatrix* data_;
    Regularizer regularizer_;
    double penalty_per_param_; // BIC: ln(M)/2, AIC: 1
    std::vector<double> ln_count_; // ln(i) for i in [1, M]; index 0 unused
};

} // namespace sbcn

#endif
