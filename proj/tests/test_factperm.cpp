#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "homrel/factperm.hpp"
#include "homrel/generators.hpp"
#include "homrel/oracle.hpp"

using namespace homrel;

namespace {

bool is_interval_of(const std::vector<int>& set, const std::vector<int>& sigma) {
    std::vector<int> pos(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) pos[sigma[i]] = static_cast<int>(i);
    int lo = static_cast<int>(sigma.size()), hi = -1;
    for (int e : set) {
        lo = std::min(lo, pos[e]);
        hi = std::max(hi, pos[e]);
    }
    return hi - lo + 1 == static_cast<int>(set.size());
}

} // namespace

TEST_CASE("oracle leaf order is a factoring permutation") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 4 + static_cast<int>(seed % 5);
        HomogeneousRelation h = (seed % 2)
            ? from_digraph(random_graph(n, 0.5, seed))
            : from_digraph(random_tournament(n, seed));
        auto rep = oracle::all_modules(h);
        auto sigma = rep.tree.dfs_leaf_order();
        FactPermOptions opts;
        opts.check_invariant = true;
        opts.validate_modules = true;
        FactPermStats stats;
        auto tree = tree_from_permutation(h, sigma, opts, &stats);
        std::vector<std::vector<int>> want;
        for (uint32_t m : rep.strong) want.push_back(oracle::mask_to_set(m));
        std::sort(want.begin(), want.end());
        CHECK(tree.node_sets() == want);
        CHECK(stats.strong_intervals <= stats.collected_intervals);
    }
}

TEST_CASE("tournament factoring permutation") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 3 + static_cast<int>(seed % 7);
        auto t = random_tournament(n, seed);
        auto sigma = tournament_factoring_permutation(t);
        REQUIRE(static_cast<int>(sigma.size()) == n);
        auto h = from_digraph(t);
        auto rep = oracle::all_modules(h);
        // every module (not just strong ones) is a sigma-interval
        for (uint32_t m : rep.modules)
            CHECK(is_interval_of(oracle::mask_to_set(m), sigma));
        auto tree = tree_from_permutation(h, sigma, {.check_invariant = true});
        std::vector<std::vector<int>> want;
        for (uint32_t m : rep.strong) want.push_back(oracle::mask_to_set(m));
        std::sort(want.begin(), want.end());
        CHECK(tree.node_sets() == want);
    }
}

TEST_CASE("transitive tournament sweep") {
    auto t = fixtures::transitive_tournament(5);
    auto sigma = tournament_factoring_permutation(t);
    auto tree = tree_from_permutation(from_digraph(t), sigma);
    // linear root after generalized tree: 5 leaves + root
    CHECK(tree.at(tree.root).children.size() == 5);
}

TEST_CASE("non-factoring permutation misses a module") {
    // two disjoint edges: modules {0,1} and {2,3}; order 0,2,1,3 breaks both
    Digraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto h = from_digraph(g);
    auto tree = tree_from_permutation(h, {0, 2, 1, 3});
    auto sets = tree.node_sets();
    CHECK(std::find(sets.begin(), sets.end(), std::vector<int>{0, 1}) == sets.end());
}

TEST_CASE("bad permutation input is rejected") {
    auto h = fixtures::three_element();
    CHECK_THROWS_AS(tree_from_permutation(h, {0, 1}), std::exception);
    CHECK_THROWS_AS(tree_from_permutation(h, {0, 1, 1}), std::exception);
    CHECK_THROWS_AS(tree_from_permutation(h, {0, 1, 5}), std::exception);
}

TEST_CASE("weak intervals are filtered out") {
    // three-element all-modules relation: every interval of any order is a
    // module, but only trivial ones are strong
    auto h = fixtures::three_element();
    auto tree = tree_from_permutation(h, {0, 1, 2}, {.validate_modules = true});
    CHECK(tree.size() == 4);
    CHECK(tree.at(tree.root).children.size() == 3);
}
