#include "sbcn/result.hpp"

namespace sbcn {

namespace {

class Fnv1a {
public:
    void add(const void* data, size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < len; ++i) {
            hash_ ^= p[i];
            hash_ *= 0x100000001B3ULL;
        }
    }
    template <typename T>
    void add_value(const T& v) {
        add(&v, sizeof(v));
    }
    uint64_t value() const { return hash_; }

private:
    uint64_t hash_ = 0xCBF29CE484222325ULL;
};

} // namespace

uint64_t config_digest(const GaConfig& config, const ObservationMatrix& d) {
    Fnv1a h;
    h.add_value(config.population_size);
    h.add_value(config.generations);
    h.add_value(config.crossover_prob);
    h.add_value(config.mutation_prob);
    h.add_value(static_cast<int>(config.regularizer));
    h.add_value(static_cast<int>(config.constraint_mode));
    h.add_value(config.seed);
    h.add_value(d.sample_count());
    h.add_value(d.variable_count());
    for (int r = 0; r < d.sample_count(); ++r)
        for (int c = 0; c < d.variable_count(); ++c) h.add_value(static_cast<char>(d.cell(r, c)));
    for (int c = 0; c < d.variable_count(); ++c) {
        const std::string label = d.column_label(c);
        h.add(label.data(), label.size());
        h.add_value('\0');
    }
    return h.value();
}

} // namespace sbcn
