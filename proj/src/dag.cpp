#include "sbcn/dag.hpp"

#include <bit>
#include <stdexcept>

namespace sbcn {

Dag::Dag(int k, std::vector<std::string> labels) : k_(k), labels_(std::move(labels)) {
    if (k < 2) throw std::invalid_argument("Dag: node count must be >= 2");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != k)
        throw std::invalid_argument("Dag: label count does not match node count");
    bits_.assign((static_cast<size_t>(k) * k + 63) / 64, 0);
}

Dag Dag::from_edges(int k, const std::vector<Arc>& edges, std::vector<std::string> labels) {
    Dag g(k, std::move(labels));
    for (const auto& [i, j] : edges) g.add_arc(i, j);
    return g;
}

int Dag::index(int i, int j) const {
    if (i < 0 || i >= k_ || j < 0 || j >= k_)
        throw std::out_of_range("Dag: node index out of range");
    return i * k_ + j;
}

void Dag::add_arc(int i, int j) {
    if (i == j) throw std::invalid_argument("Dag: self-loops are forbidden");
    set(index(i, j));
}

void Dag::remove_arc(int i, int j) { clear(index(i, j)); }

int Dag::arc_count() const {
    int n = 0;
    for (uint64_t w : bits_) n += std::popcount(w);
    return n;
}

std::vector<int> Dag::parent_set(int j) const {
    if (j < 0 || j >= k_) throw std::out_of_range("Dag: node index out of range");
    std::vector<int> parents;
    for (int i = 0; i < k_; ++i)
        if (bit(i * k_ + j)) parents.push_back(i);
    return parents;
}

std::vector<int> Dag::children(int i) const {
    if (i < 0 || i >= k_) throw std::out_of_range("Dag: node index out of range");
    std::vector<int> out;
    for (int j = 0; j < k_; ++j)
        if (bit(i * k_ + j)) out.push_back(j);
    return out;
}

std::vector<Arc> Dag::edges() const {
    std::vector<Arc> out;
    out.reserve(arc_count());
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            if (bit(i * k_ + j)) out.emplace_back(i, j);
    return out;
}

bool Dag::is_acyclic() const {
    // Kahn: peel zero in-degree nodes; a leftover in-degree means a cycle.
    std::vector<int> in_degree(k_, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            if (bit(i * k_ + j)) ++in_degree[j];

    std::vector<int> stack;
    stack.reserve(k_);
    for (int j = 0; j < k_; ++j)
        if (in_degree[j] == 0) stack.push_back(j);

    int removed = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++removed;
        for (int j = 0; j < k_; ++j)
            if (bit(u * k_ + j) && --in_degree[j] == 0) stack.push_back(j);
    }
    return removed == k_;
}

std::optional<std::vector<Arc>> Dag::find_cycle() const {
    // Iterative DFS; a back edge into the active stack closes a cycle.
    enum : uint8_t { White, Grey, Black };
    std::vector<uint8_t> color(k_, White);
    std::vector<int> stack_node;
    std::vector<int> stack_next; // next child column to probe per stack frame

    for (int root = 0; root < k_; ++root) {
        if (color[root] != White) continue;
        stack_node.assign(1, root);
        stack_next.assign(1, 0);
        color[root] = Grey;
        while (!stack_node.empty()) {
            const int u = stack_node.back();
            bool descended = false;
            while (stack_next.back() < k_) {
                const int j = stack_next.back()++;
                if (!bit(u * k_ + j)) continue;
                if (color[j] == Grey) {
                    // cycle: j -> ... -> u -> j along the DFS stack
                    std::vector<Arc> cycle;
                    size_t from = 0;
                    while (stack_node[from] != j) ++from;
                    for (size_t t = from; t + 1 < stack_node.size(); ++t)
                        cycle.emplace_back(stack_node[t], stack_node[t + 1]);
                    cycle.emplace_back(u, j);
                    return cycle;
                }
                if (color[j] == White) {
                    color[j] = Grey;
                    stack_node.push_back(j);
                    stack_next.push_back(0);
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                color[u] = Black;
                stack_node.pop_back();
                stack_next.pop_back();
            }
        }
    }
    return std::nullopt;
}

std::vector<int> Dag::topological_order() const {
    std::vector<int> in_degree(k_, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            if (bit(i * k_ + j)) ++in_degree[j];

    std::vector<int> order;
    order.reserve(k_);
    std::vector<char> placed(k_, 0);
    for (int step = 0; step < k_; ++step) {
        int pick = -1;
        for (int j = 0; j < k_; ++j) {
            if (!placed[j] && in_degree[j] == 0) {
                pick = j;
                break;
            }
        }
        if (pick < 0) throw std::logic_error("Dag: topological order of a cyclic graph");
        placed[pick] = 1;
        order.push_back(pick);
        for (int j = 0; j < k_; ++j)
            if (bit(pick * k_ + j)) --in_degree[j];
    }
    return order;
}

std::pair<Dag, Dag> Dag::splice(const Dag& a, const Dag& b, int cut) {
    if (a.k_ != b.k_) throw std::invalid_argument("Dag::splice: dimension mismatch");
    const int len = a.genome_length();
    if (cut < 0 || cut > len) throw std::out_of_range("Dag::splice: cut out of range");

    Dag c1 = a;
    Dag c2 = b;
    const size_t cut_word = static_cast<size_t>(cut) >> 6;
    const int cut_bit = cut & 63;
    for (size_t w = 0; w < a.bits_.size(); ++w) {
        uint64_t keep_a; // mask of positions taken from the first parent
        if (w < cut_word)
            keep_a = ~uint64_t{0};
        else if (w > cut_word)
            keep_a = 0;
        else
            keep_a = cut_bit == 0 ? 0 : (~uint64_t{0} >> (64 - cut_bit));
        c1.bits_[w] = (a.bits_[w] & keep_a) | (b.bits_[w] & ~keep_a);
        c2.bits_[w] = (b.bits_[w] & keep_a) | (a.bits_[w] & ~keep_a);
    }
    return {std::move(c1), std::move(c2)};
}

void Dag::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != k_)
        throw std::invalid_argument("Dag: label count does not match node count");
    labels_ = std::move(labels);
}

std::string Dag::label(int i) const {
    if (i < 0 || i >= k_) throw std::out_of_range("Dag: node index out of range");
    if (static_cast<int>(labels_.size()) == k_) return labels_[i];
    return "g" + std::to_string(i);
}

} // namespace sbcn
