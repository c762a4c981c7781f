#pragma once

#include <vector>

#include "homrel/relation.hpp"
#include "homrel/set_family.hpp"

namespace homrel {

struct SplitterReport {
    std::vector<int> subset;    // sorted
    std::vector<int> splitters; // sorted, disjoint from subset
    int count = 0;
};

// s outside a is a splitter iff the elements of a do not all lie in one class
// of H_s.  Throws on empty a.
SplitterReport splitters(const HomogeneousRelation& h, std::vector<int> a);

// True iff a has no splitter; |a| <= 1 and a = X are trivially modules.
bool is_module(const HomogeneousRelation& h, const std::vector<int>& a);

// SM(S): the unique inclusion-minimal homogeneous module containing s.
std::vector<int> smallest_module(const HomogeneousRelation& h, const std::vector<int>& s);

// MaxM(x): the unique partition of X \ {x} into inclusion-maximal modules
// avoiding x.  Member order is the final refinement order.
SetFamily max_modules_excluding(const HomogeneousRelation& h, int x);

// True iff every homogeneous module of h is trivial.
bool is_prime(const HomogeneousRelation& h);

} // namespace homrel
