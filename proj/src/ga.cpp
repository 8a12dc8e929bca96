#include "sbcn/ga.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace sbcn {

namespace {

// Sub-stream tags, arbitrary odd constants.
constexpr uint64_t kVariationTag = 0x9E6C63C0DE5EED01ULL;

std::vector<size_t> sorted_by_fitness_ascending(const Population& pop) {
    std::vector<size_t> order(pop.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return *pop.individuals[a].fitness < *pop.individuals[b].fitness;
    });
    return order;
}

} // namespace

Population initialize(const GaConfig& config, int k, const ConstraintMask* mask, Rng& rng) {
    config.validate();
    if (k < 2) throw std::invalid_argument("initialize: node count must be >= 2");

    const double arc_prob = 2.0 / k;
    Population pop;
    pop.individuals.reserve(config.population_size);
    for (int q = 0; q < config.population_size; ++q) {
        Individual ind{Dag(k), std::nullopt};
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                if (mask && !mask->is_allowed(i, j)) continue;
                if (rng.bernoulli(arc_prob)) ind.genome.add_arc(i, j);
            }
        }
        pop.individuals.push_back(repair(ind, mask, rng));
    }
    return pop;
}

std::vector<Individual> rank_select(const Population& pop, Rng& rng) {
    const size_t q = pop.size();
    for (const auto& ind : pop.individuals)
        if (!ind.evaluated()) throw std::logic_error("rank_select: unevaluated individual");

    // order[r] = index of the individual with rank r+1 (worst first)
    const std::vector<size_t> order = sorted_by_fitness_ascending(pop);
    const uint64_t total = static_cast<uint64_t>(q) * (q + 1) / 2;

    std::vector<Individual> selected;
    selected.reserve(q);
    for (size_t draw = 0; draw < q; ++draw) {
        uint64_t ticket = rng.below(total);
        // rank r+1 owns the next r+1 tickets
        size_t r = 0;
        uint64_t cumulative = 1;
        while (ticket >= cumulative) {
            ++r;
            cumulative += r + 1;
        }
        selected.push_back(pop.individuals[order[r]]);
    }
    return selected;
}

std::pair<Individual, Individual> crossover_at(const Individual& a, const Individual& b,
                                               int cut) {
    auto [g1, g2] = Dag::splice(a.genome, b.genome, cut);
    return {Individual{std::move(g1), std::nullopt}, Individual{std::move(g2), std::nullopt}};
}

std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, Rng& rng) {
    if (a.genome.node_count() != b.genome.node_count())
        throw std::invalid_argument("crossover: dimension mismatch");
    const int cut = static_cast<int>(rng.below(a.genome.genome_length() + 1));
    return crossover_at(a, b, cut);
}

Individual mutate(const Individual& ind, double p_m, Rng& rng) {
    if (p_m < 0.0 || p_m > 1.0) throw std::invalid_argument("mutate: p_m must be in [0,1]");
    Individual out{ind.genome, std::nullopt};
    const int k = ind.genome.node_count();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue; // diagonal bits never set
            if (rng.bernoulli(p_m)) out.genome.flip_genome_bit(i * k + j);
        }
    return out;
}

Individual repair(const Individual& ind, const ConstraintMask* mask, Rng& rng) {
    Individual out{mask ? apply_mask(ind.genome, *mask) : ind.genome, std::nullopt};
    for (;;) {
        const auto cycle = out.genome.find_cycle();
        if (!cycle) break;
        const auto& arcs = *cycle;
        const auto& [i, j] = arcs[rng.below(arcs.size())];
        out.genome.remove_arc(i, j);
    }
    return out;
}

void evaluate(Population& pop, const ObservationMatrix& d, const GaConfig& config,
              ThreadPool* pool) {
    const Scorer scorer(d, config.regularizer);
    auto task = [&](size_t i) {
        pop.individuals[i].fitness = scorer(pop.individuals[i].genome).total;
    };
    if (pool)
        pool->parallel_for(pop.size(), task);
    else
        for (size_t i = 0; i < pop.size(); ++i) task(i);
}

namespace detail {

Population step_impl(const Population& pop, const Scorer& scorer, const GaConfig& config,
                     const ConstraintMask* mask, Rng& rng, ThreadPool* pool) {
    const size_t q = pop.size();
    if (q < 2) throw std::logic_error("step: population too small");

    // P': ranking selection, then pair consecutive picks (odd Q duplicates
    // the last one).
    std::vector<Individual> selected = rank_select(pop, rng);
    if (selected.size() % 2 != 0) selected.push_back(selected.back());
    const size_t pairs = selected.size() / 2;

    // P'': each pair is crossed, mutated, repaired and scored on its own
    // deterministic stream, so the offspring are independent of worker count
    // and can be produced concurrently.
    const uint64_t generation_seed = rng.next_u64();
    std::vector<Individual> offspring(2 * pairs);
    auto produce = [&](size_t p) {
        Rng stream(seed_mix(generation_seed ^ kVariationTag, p));
        const Individual& a = selected[2 * p];
        const Individual& b = selected[2 * p + 1];
        auto [c1, c2] = stream.bernoulli(config.crossover_prob)
                            ? crossover(a, b, stream)
                            : std::pair<Individual, Individual>{Individual{a.genome, std::nullopt},
                                                                Individual{b.genome, std::nullopt}};
        c1 = repair(mutate(c1, config.mutation_prob, stream), mask, stream);
        c2 = repair(mutate(c2, config.mutation_prob, stream), mask, stream);
        c1.fitness = scorer(c1.genome).total;
        c2.fitness = scorer(c2.genome).total;
        offspring[2 * p] = std::move(c1);
        offspring[2 * p + 1] = std::move(c2);
    };
    if (pool)
        pool->parallel_for(pairs, produce);
    else
        for (size_t p = 0; p < pairs; ++p) produce(p);

    // Elitist replacement: best Q of P + P''; stable sort keeps incumbents
    // ahead of equal-fitness offspring.
    std::vector<const Individual*> merged;
    merged.reserve(q + offspring.size());
    for (const auto& ind : pop.individuals) merged.push_back(&ind);
    for (const auto& ind : offspring) merged.push_back(&ind);
    std::stable_sort(merged.begin(), merged.end(),
                     [](const Individual* a, const Individual* b) {
                         return *a->fitness > *b->fitness;
                     });

    Population next;
    next.generation = pop.generation + 1;
    next.individuals.reserve(q);
    for (size_t i = 0; i < q; ++i) next.individuals.push_back(*merged[i]);
    return next;
}

} // namespace detail

Population step(const Population& pop, const ObservationMatrix& d, const GaConfig& config,
                const ConstraintMask* mask, Rng& rng, ThreadPool* pool) {
    const Scorer scorer(d, config.regularizer);
    return detail::step_impl(pop, scorer, config, mask, rng, pool);
}

RunResult run(const GaConfig& config, const ObservationMatrix& d, int threads) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const int k = d.variable_count();
    ConstraintMask mask_storage;
    const ConstraintMask* mask = nullptr;
    if (config.constraint_mode == ConstraintMode::Suppes) {
        mask_storage = prima_facie_mask(d);
        mask = &mask_storage;
    }

    ThreadPool pool(threads > 0 ? threads : ThreadPool::hardware_workers());
    const Scorer scorer(d, config.regularizer);
    Rng rng(config.seed);

    Population pop = initialize(config, k, mask, rng);
    evaluate(pop, d, config, &pool);

    RunResult result;
    result.seed = config.seed;
    result.config_digest = config_digest(config, d);
    result.score_history.reserve(config.generations);
    for (int gen = 0; gen < config.generations; ++gen) {
        pop = detail::step_impl(pop, scorer, config, mask, rng, &pool);
        double best = *pop.individuals.front().fitness;
        for (const auto& ind : pop.individuals) best = std::max(best, *ind.fitness);
        result.score_history.push_back(best);
    }

    // Elitism keeps the best-ever individual in the final population.
    const Individual* best = &pop.individuals.front();
    for (const auto& ind : pop.individuals)
        if (*ind.fitness > *best->fitness) best = &ind;
    result.best = best->genome;
    result.best.set_labels(d.column_labels());
    result.best_score = *best->fitness;
    result.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace sbcn
