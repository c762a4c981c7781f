#include "homrel/generators.hpp"

#include <random>
#include <stdexcept>

namespace homrel {

namespace {

double unit(std::mt19937_64& rng) { // uniform in [0, 1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t below(std::mt19937_64& rng, uint64_t bound) {
    return rng() % bound; // modulo bias is irrelevant for test corpora
}

} // namespace

Digraph random_graph(int n, double p, uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_graph: bad parameters");
    std::mt19937_64 rng(seed);
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) g.add_edge(u, v);
    return g;
}

Digraph random_tournament(int n, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_tournament: bad size");
    std::mt19937_64 rng(seed);
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1) g.add_arc(u, v);
            else g.add_arc(v, u);
        }
    return g;
}

HomogeneousRelation random_relation(int n, int max_classes, uint64_t seed) {
    if (n < 1 || max_classes < 1)
        throw std::invalid_argument("random_relation: bad parameters");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> labels(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (y != x) labels[x][y] = static_cast<int>(below(rng, max_classes));
    return HomogeneousRelation::from_rows(n, labels);
}

TwoStructure random_two_structure(int n, int colors, uint64_t seed) {
    if (n < 1 || colors < 1)
        throw std::invalid_argument("random_two_structure: bad parameters");
    std::mt19937_64 rng(seed);
    TwoStructure t(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) t.set_color(u, v, static_cast<int>(below(rng, colors)));
    return t;
}

} // namespace homrel
