#ifndef SBCN_DAG_HPP
#define SBCN_DAG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sbcn {

using Arc = std::pair<int, int>; // (source, destination)

// Directed graph over K nodes stored as a bit-packed K x K adjacency matrix,
// linearized row-major: bit (i*K + j) set means arc i -> j. Row = source,
// column = destination. The same object serves as the GA genotype, so it can
// transiently hold cycles; acyclicity is enforced by the engine's repair step,
// not by this class. Self-loops are rejected at the API level.
//
// Node identity is the integer index; labels are carried as metadata and never
// affect computation or equality.
class Dag {
public:
    Dag() = default;
    explicit Dag(int k, std::vector<std::string> labels = {});

    /// Raw constructor for genotypes: sets exactly the given arcs, no
    /// acyclicity check. Throws std::out_of_range for bad indices and
    /// std::invalid_argument for self-loops.
    static Dag from_edges(int k, const std::vector<Arc>& edges,
                          std::vector<std::string> labels = {});

    int node_count() const { return k_; }

    bool arc(int i, int j) const { return bit(index(i, j)); }
    void add_arc(int i, int j);
    void remove_arc(int i, int j);
    int arc_count() const;

    /// { i : arc i -> j present }, ascending.
    std::vector<int> parent_set(int j) const;
    std::vector<int> children(int i) const;

    /// All arcs sorted lexicographically (row-major bit order).
    std::vector<Arc> edges() const;

    bool is_acyclic() const;

    /// Arcs of one directed cycle found by DFS back-edge detection, or
    /// nullopt when the graph is acyclic.
    std::optional<std::vector<Arc>> find_cycle() const;

    /// Kahn order, ties resolved by ascending node index. Throws
    /// std::logic_error when cyclic.
    std::vector<int> topological_order() const;

    // --- genome view -------------------------------------------------------
    int genome_length() const { return k_ * k_; }
    bool genome_bit(int pos) const { return bit(pos); }
    void flip_genome_bit(int pos) { flip(pos); }

    /// One-point crossover splice: first takes a's bits [0, cut) and b's bits
    /// [cut, K*K), second the converse. cut in {0, ..., K*K}.
    static std::pair<Dag, Dag> splice(const Dag& a, const Dag& b, int cut);

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    /// Stored label, or "g<i>" when none given.
    std::string label(int i) const;

    /// Structural equality (k and arcs); labels are metadata and excluded.
    bool operator==(const Dag& other) const {
        return k_ == other.k_ && bits_ == other.bits_;
    }
    bool operator!=(const Dag& other) const { return !(*this == other); }

    const std::vector<uint64_t>& words() const { return bits_; }

private:
    int index(int i, int j) const;
    bool bit(int pos) const {
        return (bits_[static_cast<size_t>(pos) >> 6] >> (pos & 63)) & 1u;
    }
    void set(int pos) { bits_[static_cast<size_t>(pos) >> 6] |= uint64_t{1} << (pos & 63); }
    void clear(int pos) { bits_[static_cast<size_t>(pos) >> 6] &= ~(uint64_t{1} << (pos & 63)); }
    void flip(int pos) { bits_[static_cast<size_t>(pos) >> 6] ^= uint64_t{1} << (pos & 63); }

    int k_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<std::string> labels_;
};

} // namespace sbcn

#endif
