#include "sbcn/scoring.hpp"

#include <cmath>
#include <stdexcept>

namespace sbcn {

namespace {

constexpr int kMaxParents = 26; // 2^26 table entries; far beyond anything BIC keeps alive

void check_dims(const Dag& g, const ObservationMatrix& d) {
    if (g.node_count() != d.variable_count())
        throw std::invalid_argument("scoring: graph and data dimension mismatch");
}

// Counts per parent configuration: n[c] rows with configuration c, of which
// ones[c] have node = 1. Configuration bit t = value of parents[t].
void family_counts(const ObservationMatrix& d, int node, const std::vector<int>& parents,
                   std::vector<int>& n, std::vector<int>& ones) {
    const int np = static_cast<int>(parents.size());
    if (np > kMaxParents) throw std::invalid_argument("scoring: parent set too large");
    const size_t configs = size_t{1} << np;
    n.assign(configs, 0);
    ones.assign(configs, 0);

    const int m = d.sample_count();
    for (int r = 0; r < m; ++r) {
        const uint64_t* row = d.row(r);
        size_t c = 0;
        for (int t = 0; t < np; ++t) {
            const int p = parents[t];
            c |= ((row[p >> 6] >> (p & 63)) & 1u) << t;
        }
        ++n[c];
        ones[c] += static_cast<int>((row[node >> 6] >> (node & 63)) & 1u);
    }
}

} // namespace

std::vector<Cpt> fit_parameters(const Dag& g, const ObservationMatrix& d) {
    check_dims(g, d);
    if (!g.is_acyclic()) throw std::invalid_argument("fit_parameters: graph is cyclic");

    std::vector<Cpt> cpts;
    cpts.reserve(g.node_count());
    std::vector<int> n, ones;
    for (int j = 0; j < g.node_count(); ++j) {
        Cpt cpt;
        cpt.node = j;
        cpt.parents = g.parent_set(j);
        family_counts(d, j, cpt.parents, n, ones);
        cpt.table.resize(n.size());
        for (size_t c = 0; c < n.size(); ++c)
            cpt.table[c] = n[c] == 0 ? 0.5 : static_cast<double>(ones[c]) / n[c];
        cpts.push_back(std::move(cpt));
    }
    return cpts;
}

Scorer::Scorer(const ObservationMatrix& d, Regularizer regularizer)
    : data_(&d), regularizer_(regularizer) {
    const int m = d.sample_count();
    penalty_per_param_ =
        regularizer == Regularizer::Bic ? std::log(static_cast<double>(m)) / 2.0 : 1.0;
    ln_count_.resize(m + 1);
    for (int i = 1; i <= m; ++i) ln_count_[i] = std::log(static_cast<double>(i));
}

double Scorer::family_ll(int node, const std::vector<int>& parents) const {
    std::vector<int> n, ones;
    family_counts(*data_, node, parents, n, ones);
    double ll = 0.0;
    for (size_t c = 0; c < n.size(); ++c) {
        const int nc = n[c];
        if (nc == 0) continue;
        const int n1 = ones[c];
        const int n0 = nc - n1;
        if (n1 > 0) ll += n1 * (ln_count_[n1] - ln_count_[nc]);
        if (n0 > 0) ll += n0 * (ln_count_[n0] - ln_count_[nc]);
    }
    return ll;
}

ScoreBreakdown Scorer::operator()(const Dag& g) const {
    check_dims(g, *data_);
    ScoreBreakdown b;
    for (int j = 0; j < g.node_count(); ++j) {
        const std::vector<int> parents = g.parent_set(j);
        b.log_likelihood += family_ll(j, parents);
        b.dimension += 1LL << parents.size();
    }
    b.penalty = penalty_per_param_ * static_cast<double>(b.dimension);
    b.total = b.log_likelihood - b.penalty;
    return b;
}

double family_log_likelihood(const ObservationMatrix& d, int node,
                             const std::vector<int>& parents) {
    return Scorer(d, Regularizer::Bic).family_ll(node, parents);
}

double log_likelihood(const Dag& g, const ObservationMatrix& d) {
    check_dims(g, d);
    Scorer scorer(d, Regularizer::Bic);
    double ll = 0.0;
    for (int j = 0; j < g.node_count(); ++j) ll += scorer.family_ll(j, g.parent_set(j));
    return ll;
}

long long dimension(const Dag& g) {
    long long dim = 0;
    for (int j = 0; j < g.node_count(); ++j) {
        const size_t np = g.parent_set(j).size();
        if (np > 62) throw std::invalid_argument("dimension: parent set too large");
        dim += 1LL << np;
    }
    return dim;
}

ScoreBreakdown score(const Dag& g, const ObservationMatrix& d, Regularizer regularizer) {
    return Scorer(d, regularizer)(g);
}

} // namespace sbcn
