#include "homrel/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace homrel {

Partition::Partition(int n, const std::vector<std::vector<int>>& initial_parts)
    : n_(n), pos_(n, -1), part_of_(n, -1) {
    int prev = -1;
    for (const auto& part : initial_parts) {
        if (part.empty()) throw std::invalid_argument("Partition: empty part");
        int p = static_cast<int>(parts_.size());
        parts_.push_back({static_cast<int>(elems_.size()),
                          static_cast<int>(elems_.size() + part.size()), prev, -1});
        for (int e : part) {
            if (e < 0 || e >= n || pos_[e] >= 0)
                throw std::invalid_argument("Partition: bad or repeated element");
            pos_[e] = static_cast<int>(elems_.size());
            elems_.push_back(e);
            part_of_[e] = p;
        }
        if (prev >= 0) parts_[prev].next = p; else head_ = p;
        prev = p;
        ++nparts_;
    }
}

std::vector<int> Partition::part_elements(int p) const {
    return {elems_.begin() + parts_[p].begin, elems_.begin() + parts_[p].end};
}

std::vector<int> Partition::refine_by_pivot(const HomogeneousRelation& h, int pivot,
                                            Group scope,
                                            std::vector<Group>* old_segments) {
    std::vector<int> split_handles;
    if (elems_.empty()) return split_handles;
    int own = contains(pivot) ? part_of_[pivot] : -1;

    // class id -> bucket index, reset per part via the touched list
    std::vector<int> bucket_of(static_cast<size_t>(h.size()) + 1, -1);
    std::vector<int> touched;
    std::vector<std::vector<int>> buckets;

    int p = scope.lo < static_cast<int>(elems_.size()) ? part_at_position(scope.lo) : -1;
    while (p >= 0 && parts_[p].begin < scope.hi) {
        int next = parts_[p].next;
        if (p != own && part_size(p) >= 2) {
            int begin = parts_[p].begin, end = parts_[p].end;
            buckets.clear();
            touched.clear();
            for (int i = begin; i < end; ++i) {
                int c = h.cls(pivot, elems_[i]);
                if (bucket_of[c] < 0) {
                    bucket_of[c] = static_cast<int>(buckets.size());
                    buckets.emplace_back();
                    touched.push_back(c);
                }
                buckets[bucket_of[c]].push_back(elems_[i]);
            }
            for (int c : touched) bucket_of[c] = -1;
            if (buckets.size() >= 2) {
                if (old_segments) old_segments->push_back({begin, end});
                split_handles.push_back(p);
                int at = begin;
                int prev = parts_[p].prev;
                int after = parts_[p].next;
                for (size_t b = 0; b < buckets.size(); ++b) {
                    int handle = b == 0 ? p : static_cast<int>(parts_.size());
                    if (b > 0) { parts_.push_back({0, 0, 0, 0}); ++nparts_; }
                    Part& part = parts_[handle];
                    part.begin = at;
                    for (int e : buckets[b]) {
                        elems_[at] = e;
                        pos_[e] = at;
                        part_of_[e] = handle;
                        ++at;
                    }
                    part.end = at;
                    part.prev = prev;
                    if (prev >= 0) parts_[prev].next = handle; else head_ = handle;
                    prev = handle;
                }
                parts_[prev].next = after;
                if (after >= 0) parts_[after].prev = prev;
            }
        }
        p = next;
    }
    return split_handles;
}

long long Partition::q_measure() const {
    long long m = static_cast<long long>(elems_.size());
    long long q = m * (m - 1) / 2;
    for (int p = head_; p >= 0; p = parts_[p].next) {
        long long s = part_size(p);
        q -= s * (s - 1) / 2;
    }
    return q;
}

std::vector<std::vector<int>> Partition::parts_in_order() const {
    std::vector<std::vector<int>> out;
    for (int p = head_; p >= 0; p = parts_[p].next) out.push_back(part_elements(p));
    return out;
}

} // namespace homrel
