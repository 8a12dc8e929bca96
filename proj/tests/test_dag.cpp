#include <doctest.h>

#include <algorithm>
#include <set>

#include "sbcn/dag.hpp"
#include "sbcn/rng.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace sbcn;

TEST_CASE("from_edges reproduces the 15-node tree matrix exactly") {
    const Dag g = fixtures::tree15();
    CHECK(g.arc_count() == 14);
    for (const auto& [i, j] : fixtures::tree15_edges()) CHECK(g.arc(i, j));
    // everything else is zero
    int set_bits = 0;
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j) set_bits += g.arc(i, j);
    CHECK(set_bits == 14);
}

TEST_CASE("from_edges edge cases") {
    const Dag empty = Dag::from_edges(3, {});
    CHECK(empty.arc_count() == 0);
    CHECK(empty.is_acyclic());

    const Dag two_cycle = Dag::from_edges(2, {{0, 1}, {1, 0}});
    CHECK(two_cycle.arc_count() == 2);
    CHECK_FALSE(two_cycle.is_acyclic());

    CHECK_THROWS_AS(Dag::from_edges(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(Dag::from_edges(3, {{-1, 0}}), std::out_of_range);
    CHECK_THROWS_AS(Dag::from_edges(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("is_acyclic on known graphs") {
    CHECK(fixtures::tree15().is_acyclic());
    CHECK(Dag(4).is_acyclic());
    CHECK_FALSE(Dag::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}).is_acyclic());
}

TEST_CASE("is_acyclic agrees with the transitive-closure oracle") {
    Rng rng(20210915);
    for (int trial = 0; trial < 2000; ++trial) {
        Dag g(6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (i != j && rng.bernoulli(0.3)) g.add_arc(i, j);
        CHECK(g.is_acyclic() == oracles::closure_is_acyclic(g));
    }
}

TEST_CASE("parent_set") {
    const Dag g = fixtures::tree15();
    CHECK(g.parent_set(4) == std::vector<int>{14});
    CHECK(g.parent_set(0).empty());
    CHECK(Dag(5).parent_set(3).empty());
    CHECK_THROWS_AS(g.parent_set(15), std::out_of_range);
}

TEST_CASE("edge-set round trip and parent-set popcount identity") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + static_cast<int>(rng.below(31)); // K <= 32
        std::set<Arc> want;
        for (int e = 0; e < k; ++e) {
            const int i = static_cast<int>(rng.below(k));
            const int j = static_cast<int>(rng.below(k));
            if (i != j) want.emplace(i, j);
        }
        const Dag g = Dag::from_edges(k, {want.begin(), want.end()});
        const std::vector<Arc> got = g.edges();
        CHECK(std::set<Arc>(got.begin(), got.end()) == want);
        CHECK(std::is_sorted(got.begin(), got.end()));

        size_t parent_sum = 0;
        for (int j = 0; j < k; ++j) parent_sum += g.parent_set(j).size();
        CHECK(parent_sum == static_cast<size_t>(g.arc_count()));
    }
}

TEST_CASE("find_cycle returns a genuine cycle") {
    Rng rng(99);
    int cyclic_seen = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Dag g(7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                if (i != j && rng.bernoulli(0.25)) g.add_arc(i, j);
        const auto cycle = g.find_cycle();
        CHECK(cycle.has_value() == !oracles::closure_is_acyclic(g));
        if (!cycle) continue;
        ++cyclic_seen;
        const auto& arcs = *cycle;
        REQUIRE(arcs.size() >= 2);
        for (size_t t = 0; t < arcs.size(); ++t) {
            CHECK(g.arc(arcs[t].first, arcs[t].second));
            CHECK(arcs[t].second == arcs[(t + 1) % arcs.size()].first); // closed walk
        }
    }
    CHECK(cyclic_seen > 100);
}

TEST_CASE("topological order respects arcs") {
    const Dag g = fixtures::tree15();
    const std::vector<int> order = g.topological_order();
    std::vector<int> position(15);
    for (int t = 0; t < 15; ++t) position[order[t]] = t;
    for (const auto& [i, j] : g.edges()) CHECK(position[i] < position[j]);
    CHECK_THROWS_AS(Dag::from_edges(2, {{0, 1}, {1, 0}}).topological_order(), std::logic_error);
}

TEST_CASE("splice boundaries copy the parents") {
    const Dag a = Dag::from_edges(4, {{0, 1}, {2, 3}});
    const Dag b = Dag::from_edges(4, {{1, 0}, {3, 2}});
    auto [c1, c2] = Dag::splice(a, b, 0);
    CHECK(c1 == b);
    CHECK(c2 == a);
    std::tie(c1, c2) = Dag::splice(a, b, 16);
    CHECK(c1 == a);
    CHECK(c2 == b);
}

TEST_CASE("splice cuts where expected") {
    // K=2 genome bit order: (0,0) (0,1) (1,0) (1,1)
    const Dag a = Dag::from_edges(2, {{0, 1}}); // bits 0100
    const Dag b = Dag::from_edges(2, {{1, 0}}); // bits 0010
    const auto [c1, c2] = Dag::splice(a, b, 2);
    CHECK(c1 == Dag::from_edges(2, {{0, 1}, {1, 0}})); // 01|10: a 2-cycle
    CHECK(c2 == Dag(2));                               // 00|00
}

TEST_CASE("splice preserves the per-position bit multiset") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = 2 + static_cast<int>(rng.below(14));
        Dag a(k), b(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                if (rng.bernoulli(0.4)) a.add_arc(i, j);
                if (rng.bernoulli(0.4)) b.add_arc(i, j);
            }
        const int cut = static_cast<int>(rng.below(k * k + 1));
        const auto [c1, c2] = Dag::splice(a, b, cut);
        for (int pos = 0; pos < k * k; ++pos) {
            CHECK(static_cast<int>(c1.genome_bit(pos)) + c2.genome_bit(pos) ==
                  static_cast<int>(a.genome_bit(pos)) + b.genome_bit(pos));
        }
    }
}

TEST_CASE("labels are metadata only") {
    Dag g = Dag::from_edges(2, {{0, 1}}, {"TP53", "KRAS"});
    CHECK(g.label(0) == "TP53");
    CHECK(g == Dag::from_edges(2, {{0, 1}}));
    CHECK(Dag(3).label(2) == "g2");
}
