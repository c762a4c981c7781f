#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "homrel/axioms.hpp"
#include "homrel/generators.hpp"

using namespace homrel;

TEST_CASE("fixture K: symmetric axiom holds, quotients do not") {
    auto k = fixtures::relation_k();
    CHECK(is_weakly_graphic(k));
    CHECK(is_weakly_digraphic(k));
    auto mq = is_modular_quotient(k);
    CHECK(!mq.ok);
    CHECK(mq.exact);
    REQUIRE(mq.witness.has_value());
    CHECK(mq.witness->module == std::vector<int>{0, 1});
    // x and y disagree about the outside pair
    std::vector<int> outside{mq.witness->s, mq.witness->t};
    std::sort(outside.begin(), outside.end());
    CHECK(outside == std::vector<int>{2, 3});
}

TEST_CASE("fixture L: good but not weakly digraphic") {
    auto l = fixtures::relation_l();
    auto mq = is_modular_quotient(l);
    CHECK(mq.ok);
    CHECK(mq.exact);
    QuadWitness qw;
    CHECK(!is_weakly_digraphic(l, &qw));
    CHECK(!is_weakly_graphic(l));
    // witness elements are pairwise distinct and indeed break the implication
    std::vector<int> w{qw.x, qw.y, qw.s, qw.t};
    std::sort(w.begin(), w.end());
    CHECK(std::unique(w.begin(), w.end()) == w.end());
    CHECK(l.same(qw.s, qw.x, qw.y));
    CHECK(l.same(qw.t, qw.x, qw.y));
    CHECK(l.same(qw.y, qw.s, qw.x));
    CHECK(l.same(qw.y, qw.t, qw.x));
    CHECK(!l.same(qw.x, qw.s, qw.t));
}

TEST_CASE("weakly graphic implies weakly digraphic") {
    int graphic = 0;
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        auto h = (seed % 2) ? random_relation(6, 2, seed)
                            : from_digraph(random_graph(6, 0.5, seed));
        if (is_weakly_graphic(h)) {
            ++graphic;
            CHECK(is_weakly_digraphic(h));
        }
    }
    CHECK(graphic > 0); // the property test actually fired
}

TEST_CASE("standard relations are modular quotient") {
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        CHECK(is_modular_quotient(from_digraph(random_graph(7, 0.5, seed))).ok);
        CHECK(is_modular_quotient(from_digraph(random_tournament(7, seed))).ok);
        CHECK(is_modular_quotient(from_two_structure(random_two_structure(6, 3, seed))).ok);
    }
}

TEST_CASE("large relations fall back to the pair scan") {
    auto mq = is_modular_quotient(from_digraph(random_graph(20, 0.5, 3)));
    CHECK(mq.ok);
    CHECK(!mq.exact); // positive answers above the cap are necessary-only
}

TEST_CASE("graph recognition round trip") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        auto g = random_graph(9, 0.4, seed);
        auto h = from_digraph(g);
        auto back = recognize_graphic(h);
        REQUIRE(back.has_value());
        CHECK(from_digraph(*back) == h);
        CHECK(back->is_symmetric());
    }
    // C5 is self-complementary: either reconstruction must reproduce h
    auto c5 = from_digraph(fixtures::cycle(5));
    auto back = recognize_graphic(c5);
    REQUIRE(back.has_value());
    CHECK(from_digraph(*back) == c5);
}

TEST_CASE("tournament recognition round trip") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        auto t = random_tournament(9, seed);
        auto h = from_digraph(t);
        auto back = recognize_tournamental(h);
        REQUIRE(back.has_value());
        CHECK(from_digraph(*back) == h);
        CHECK(back->is_tournament());
    }
}

TEST_CASE("K is neither graphic nor tournamental") {
    auto k = fixtures::relation_k();
    CHECK(!recognize_graphic(k).has_value());
    CHECK(!recognize_tournamental(k).has_value());
}

TEST_CASE("cross recognition fails") {
    // a graph with an asymmetric relation cannot be a tournament and vice
    // versa, unless trivially small
    auto h = from_digraph(fixtures::p4());
    CHECK(recognize_graphic(h).has_value());
    CHECK(!recognize_tournamental(h).has_value());
    auto t = from_digraph(fixtures::transitive_tournament(4));
    CHECK(recognize_tournamental(t).has_value());
    CHECK(!recognize_graphic(t).has_value());
}

TEST_CASE("tiny cases recognize trivially") {
    HomogeneousRelation one(1);
    CHECK(recognize_graphic(one).has_value());
    CHECK(recognize_tournamental(one).has_value());
    HomogeneousRelation two(2);
    CHECK(recognize_graphic(two).has_value());
    CHECK(recognize_tournamental(two).has_value());
}
