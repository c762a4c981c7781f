#pragma once

#include <vector>

#include "homrel/relation.hpp"

namespace homrel {

// Refinable ordered partition over a subset of 0..n-1.  Elements live in a
// contiguous array; each part owns a segment of it, and splitting a part
// replaces it by parts occupying the same positions.  Groups are position
// intervals: since splits never move elements across old part boundaries, a
// part's segment recorded at any time stays a valid boundary-aligned interval
// and delimits exactly the parts descending from it.
class Partition {
public:
    struct Group { int lo = 0, hi = 0; }; // position interval [lo, hi)

    Partition(int n, const std::vector<std::vector<int>>& initial_parts);

    int universe_size() const { return n_; }
    int element_count() const { return static_cast<int>(elems_.size()); }
    int part_count() const { return nparts_; }
    bool contains(int e) const { return pos_[e] >= 0; }

    int part_of(int e) const { return part_of_[e]; }
    int part_size(int p) const { return parts_[p].end - parts_[p].begin; }
    std::vector<int> part_elements(int p) const;
    Group segment_of_part(int p) const { return {parts_[p].begin, parts_[p].end}; }
    Group whole() const { return {0, element_count()}; }

    int first_part() const { return head_; }
    int next_part(int p) const { return parts_[p].next; }
    int part_at_position(int pos) const { return part_of_[elems_[pos]]; }
    int element_at(int pos) const { return elems_[pos]; }

    // Rule 1: split every part intersecting scope, except the pivot's own
    // part, into its intersections with the classes of H_pivot (stable, in
    // order of first class appearance).  The pivot may be outside the
    // partition, in which case no part is exempt.  Returns the handles of the
    // parts actually split (each handle now names the first fragment); if
    // old_segments is given, it receives the pre-split segment of each.
    std::vector<int> refine_by_pivot(const HomogeneousRelation& h, int pivot, Group scope,
                                     std::vector<Group>* old_segments = nullptr);
    std::vector<int> refine_by_pivot(const HomogeneousRelation& h, int pivot) {
        return refine_by_pivot(h, pivot, whole());
    }

    // Q(P): number of unordered pairs lying in different parts.
    long long q_measure() const;

    std::vector<std::vector<int>> parts_in_order() const;
    std::vector<int> elements_in_order() const { return elems_; }

private:
    struct Part { int begin, end, prev, next; };

    int n_;
    std::vector<int> elems_;   // contiguous element array
    std::vector<int> pos_;     // element -> position, -1 if absent
    std::vector<int> part_of_; // element -> part handle
    std::vector<Part> parts_;
    int head_ = -1;
    int nparts_ = 0;
};

} // namespace homrel
