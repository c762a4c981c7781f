#pragma once

#include <vector>

#include "homrel/relation.hpp"
#include "homrel/set_family.hpp"

namespace fixtures {

// Four elements x,y,s,t = 0,1,2,3.  {x,y} is the unique nontrivial module;
// the relation satisfies the graphic-style symmetry axiom but x and y
// disagree about the outside pair (s,t).
inline homrel::HomogeneousRelation relation_k() {
    std::vector<std::vector<std::vector<int>>> rows = {
        {{1}, {2}, {3}},
        {{0}, {2, 3}},
        {{0, 1}, {3}},
        {{0, 1}, {2}},
    };
    return homrel::HomogeneousRelation::from_class_lists(4, rows);
}

// Five elements x,y,s,t,z = 0,1,2,3,4.  Prime (only trivial modules), hence
// vacuously modular quotient, but (x,y,s,t) violates the digraphic axiom.
inline homrel::HomogeneousRelation relation_l() {
    std::vector<std::vector<std::vector<int>>> rows = {
        {{2}, {3, 1, 4}},
        {{2, 3, 0}, {4}},
        {{0, 1}, {3, 4}},
        {{0, 1}, {2, 4}},
        {{0}, {2, 3, 1}},
    };
    return homrel::HomogeneousRelation::from_class_lists(5, rows);
}

// Every row a single class: all seven nonempty subsets are modules.
inline homrel::HomogeneousRelation three_element() {
    return homrel::HomogeneousRelation(3);
}

// One overlap class whose members chain across 0..8; all nine signature
// groups are singletons.
inline homrel::SetFamily chained_family() {
    homrel::SetFamily f;
    f.ground = 9;
    f.members = {
        {0, 1, 7},
        {1, 2, 3, 7, 8},
        {3, 4, 5, 7, 8},
        {5, 6, 8},
    };
    return f;
}

// Path on four vertices: the smallest prime graph.
inline homrel::Digraph p4() {
    homrel::Digraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

inline homrel::Digraph cycle(int n) {
    homrel::Digraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline homrel::Digraph complete_graph(int n) {
    homrel::Digraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline homrel::Digraph transitive_tournament(int n) {
    homrel::Digraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_arc(i, j);
    return g;
}

} // namespace fixtures
