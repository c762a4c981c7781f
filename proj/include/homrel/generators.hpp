#pragma once

#include <cstdint>

#include "homrel/relation.hpp"

namespace homrel {

// Seeded generators for test corpora.  They use raw std::mt19937_64 draws
// (not std::uniform_* distributions, whose output is implementation-defined)
// so the same seed produces the same object on every platform.
Digraph random_graph(int n, double p, uint64_t seed);
Digraph random_tournament(int n, uint64_t seed);
HomogeneousRelation random_relation(int n, int max_classes, uint64_t seed);
TwoStructure random_two_structure(int n, int colors, uint64_t seed);

} // namespace homrel
