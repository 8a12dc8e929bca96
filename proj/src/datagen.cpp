#include "sbcn/datagen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sbcn {

namespace {

std::vector<int> random_permutation(int k, Rng& rng) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = k - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);
    return perm;
}

Dag attach_tree(int k, Rng& rng, bool forest) {
    if (k < 2) throw std::invalid_argument("random_tree: need at least 2 nodes");
    const std::vector<int> perm = random_permutation(k, rng);
    Dag g(k);
    for (int t = 1; t < k; ++t) {
        if (forest && rng.bernoulli(1.0 / k)) continue; // fresh root
        const int parent = perm[rng.below(t)];
        g.add_arc(parent, perm[t]);
    }
    return g;
}

} // namespace

Dag random_tree(int k, Rng& rng) { return attach_tree(k, rng, false); }

Dag random_forest(int k, Rng& rng) { return attach_tree(k, rng, true); }

GenerativeModel sample_cpts(const Dag& g, Rng& rng, const CptRanges& ranges) {
    if (!g.is_acyclic()) throw std::invalid_argument("sample_cpts: structure is cyclic");

    GenerativeModel model;
    model.structure = g;
    model.cpts.resize(g.node_count());
    for (int j = 0; j < g.node_count(); ++j) {
        Cpt& cpt = model.cpts[j];
        cpt.node = j;
        cpt.parents = g.parent_set(j);
        const size_t np = cpt.parents.size();
        if (np == 0) {
            cpt.table = {rng.uniform(ranges.root_min, ranges.root_max)};
        } else if (np == 1) {
            const double p_low = rng.uniform(ranges.low_min, ranges.low_max);
            const double p_high = rng.uniform(ranges.high_min, ranges.high_max);
            cpt.table = {p_low, p_high};
        } else {
            // Draw 2^np values across the whole conditional range, sort them
            // ascending and hand them out in popcount order, nudging exact
            // duplicates apart so the popcount ordering is strict.
            const size_t n = size_t{1} << np;
            std::vector<double> values(n);
            for (auto& v : values) v = rng.uniform(ranges.low_min, ranges.high_max);
            std::sort(values.begin(), values.end());
            for (size_t i = 1; i < n; ++i)
                if (values[i] <= values[i - 1])
                    values[i] = std::nextafter(values[i - 1], 1.0);

            std::vector<size_t> configs(n);
            std::iota(configs.begin(), configs.end(), size_t{0});
            std::stable_sort(configs.begin(), configs.end(), [](size_t a, size_t b) {
                return std::popcount(a) < std::popcount(b);
            });
            cpt.table.resize(n);
            for (size_t i = 0; i < n; ++i) cpt.table[configs[i]] = values[i];
        }
    }
    return model;
}

ObservationMatrix forward_sample(const GenerativeModel& model, int m, Rng& rng) {
    if (m < 1) throw std::invalid_argument("forward_sample: need at least 1 sample");
    const Dag& g = model.structure;
    const std::vector<int> order = g.topological_order();

    ObservationMatrix d(m, g.node_count());
    for (int r = 0; r < m; ++r) {
        for (int j : order) {
            const Cpt& cpt = model.cpts[j];
            size_t c = 0;
            for (size_t t = 0; t < cpt.parents.size(); ++t)
                c |= static_cast<size_t>(d.cell(r, cpt.parents[t])) << t;
            if (rng.bernoulli(cpt.table[c])) d.set_cell(r, j, true);
        }
    }
    return d;
}

ObservationMatrix inject_noise(const ObservationMatrix& d, double epsilon, Rng& rng) {
    if (epsilon < 0.0 || epsilon > 0.5)
        throw std::invalid_argument("inject_noise: epsilon must be in [0, 0.5]");
    ObservationMatrix out = d;
    for (int r = 0; r < d.sample_count(); ++r)
        for (int c = 0; c < d.variable_count(); ++c)
            if (rng.bernoulli(epsilon)) out.set_cell(r, c, !out.cell(r, c));
    return out;
}

ObservationMatrix inject_noise_exact(const ObservationMatrix& d, double epsilon, Rng& rng) {
    if (epsilon < 0.0 || epsilon > 0.5)
        throw std::invalid_argument("inject_noise: epsilon must be in [0, 0.5]");
    const size_t cells = static_cast<size_t>(d.sample_count()) * d.variable_count();
    const size_t flips = static_cast<size_t>(std::llround(epsilon * static_cast<double>(cells)));

    // Partial Fisher-Yates over cell indices.
    std::vector<size_t> idx(cells);
    std::iota(idx.begin(), idx.end(), size_t{0});
    ObservationMatrix out = d;
    for (size_t t = 0; t < flips; ++t) {
        const size_t pick = t + rng.below(cells - t);
        std::swap(idx[t], idx[pick]);
        const int r = static_cast<int>(idx[t] / d.variable_count());
        const int c = static_cast<int>(idx[t] % d.variable_count());
        out.set_cell(r, c, !out.cell(r, c));
    }
    return out;
}

uint64_t instance_seed(uint64_t master_seed, int instance_index) {
    return seed_mix(master_seed, static_cast<uint64_t>(instance_index));
}

std::vector<BenchmarkInstance> benchmark_suite(int trees_per_level, int k, int m,
                                               const std::vector<double>& noise_levels,
                                               uint64_t master_seed, const CptRanges& ranges,
                                               bool forest) {
    if (trees_per_level < 1) throw std::invalid_argument("benchmark_suite: need >= 1 tree per level");
    if (noise_levels.empty()) throw std::invalid_argument("benchmark_suite: no noise levels");

    std::vector<BenchmarkInstance> instances;
    instances.reserve(static_cast<size_t>(trees_per_level) * noise_levels.size());
    int global = 0;
    for (size_t level = 0; level < noise_levels.size(); ++level) {
        for (int t = 0; t < trees_per_level; ++t, ++global) {
            const uint64_t seed = instance_seed(master_seed, global);
            Rng rng(seed);
            GenerativeModel model = sample_cpts(
                forest ? random_forest(k, rng) : random_tree(k, rng), rng, ranges);
            const ObservationMatrix clean = forward_sample(model, m, rng);
            ObservationMatrix data = inject_noise(clean, noise_levels[level], rng);
            instances.push_back(BenchmarkInstance{std::move(model), std::move(data),
                                                  noise_levels[level], static_cast<int>(level), t,
                                                  seed});
        }
    }
    return instances;
}

} // namespace sbcn
