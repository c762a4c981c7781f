#pragma once

#include <vector>

#include "homrel/errors.hpp"
#include "homrel/relation.hpp"
#include "homrel/tree.hpp"

namespace homrel {

struct FactPermOptions {
    bool check_invariant = false;  // cubic audit of the splitter bookkeeping
    bool validate_modules = false; // re-test every surviving interval
};

struct FactPermStats {
    long long delta_insertions = 0;
    int collected_intervals = 0;
    int strong_intervals = 0;
};

// Generalised modular decomposition tree from a factoring permutation (a
// depth-first leaf order of that tree).  Quadratic right-to-left sweep over
// the right-free intervals of sigma.  Throws DefensiveCheckError when the
// sweep detects that sigma is not a factoring permutation of h.
Tree tree_from_permutation(const HomogeneousRelation& h, const std::vector<int>& sigma,
                           const FactPermOptions& opts = {},
                           FactPermStats* stats = nullptr);

// Factoring permutation of a tournament: iterated refinement of the segment
// containing the pivot into in-neighbours, pivot, out-neighbours.
std::vector<int> tournament_factoring_permutation(const Digraph& t);

} // namespace homrel
