#ifndef SBCN_CONFIG_HPP
#define SBCN_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sbcn {

enum class Regularizer { Bic, Aic };
enum class ConstraintMode { Unconstrained, Suppes };

inline std::string to_string(Regularizer r) { return r == Regularizer::Bic ? "bic" : "aic"; }
inline std::string to_string(ConstraintMode m) {
    return m == ConstraintMode::Suppes ? "suppes" : "unconstrained";
}

inline Regularizer regularizer_from_string(const std::string& s) {
    if (s == "bic") return Regularizer::Bic;
    if (s == "aic") return Regularizer::Aic;
    throw std::invalid_argument("unknown regularizer: " + s);
}

inline ConstraintMode constraint_mode_from_string(const std::string& s) {
    if (s == "suppes") return ConstraintMode::Suppes;
    if (s == "unconstrained") return ConstraintMode::Unconstrained;
    throw std::invalid_argument("unknown constraint mode: " + s);
}

struct GaConfig {
    int population_size = 64;
    int generations = 100;
    double crossover_prob = 1.0;
    double mutation_prob = 0.01;
    Regularizer regularizer = Regularizer::Bic;
    ConstraintMode constraint_mode = ConstraintMode::Unconstrained;
    uint64_t seed = 0;

    void validate() const {
        if (population_size < 2) throw std::invalid_argument("population_size must be >= 2");
        if (generations < 1) throw std::invalid_argument("generations must be >= 1");
        if (crossover_prob < 0.0 || crossover_prob > 1.0)
            throw std::invalid_argument("crossover_prob must be in [0,1]");
        if (mutation_prob < 0.0 || mutation_prob > 1.0)
            throw std::invalid_argument("mutation_prob must be in [0,1]");
    }
};

} // namespace sbcn

#endif
