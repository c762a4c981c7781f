#pragma once

#include <vector>

#include "homrel/relation.hpp"
#include "homrel/set_family.hpp"
#include "homrel/tree.hpp"

namespace homrel {

struct OverlapClass {
    std::vector<int> members;              // indices into the (deduplicated) family
    std::vector<int> support;              // union of members, sorted
    std::vector<std::vector<int>> atoms;   // partition of support
};

// Z(H): for every ordered pair x != y, the largest module containing x but
// not y.  Computed as the parts of MaxM(y) over all y; duplicates removed,
// members sorted lexicographically.
SetFamily z_family(const HomogeneousRelation& h);

// Connected components of the overlap relation on the distinct members of f.
// Atoms are the groups of support elements contained in exactly the same
// members of the class.  Classes ordered by support, lexicographically.
std::vector<OverlapClass> overlap_classes(const SetFamily& f);

// Generalized decomposition tree: the inclusion tree of all strong homogeneous
// modules (supports of overlap classes of Z(H), plus the atoms that are
// modules, plus the trivial strong members).
Tree strong_modules(const HomogeneousRelation& h);

} // namespace homrel
