#pragma once

#include <vector>

namespace homrel {

// A list of element subsets over ground set 0..ground-1.  Members are kept
// sorted ascending; member order is meaningful where documented (e.g. the
// refinement order of MaxM).
struct SetFamily {
    int ground = 0;
    std::vector<std::vector<int>> members;
};

// A overlaps B iff A∩B, A∖B, B∖A are all nonempty.  Both inputs sorted.
bool overlaps(const std::vector<int>& a, const std::vector<int>& b);

} // namespace homrel
