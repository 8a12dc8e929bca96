#ifndef SBCN_POPULATION_HPP
#define SBCN_POPULATION_HPP

#include <optional>
#include <vector>

#include "sbcn/dag.hpp"

namespace sbcn {

struct Individual {
    Dag genome;
    std::optional<double> fitness; // present iff evaluated

    bool evaluated() const { return fitness.has_value(); }
};

struct Population {
    std::vector<Individual> individuals;
    int generation = 0;

    size_t size() const { return individuals.size(); }
};

} // namespace sbcn

#endif
