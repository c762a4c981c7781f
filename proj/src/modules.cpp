#include "homrel/modules.hpp"

#include <algorithm>
#include <deque>

#include "homrel/partition.hpp"

namespace homrel {

bool overlaps(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0, inter = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++inter; ++i; ++j; }
    }
    return inter > 0 && inter < a.size() && inter < b.size();
}

SplitterReport splitters(const HomogeneousRelation& h, std::vector<int> a) {
    if (a.empty()) throw std::invalid_argument("splitters: empty subset");
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    int n = h.size();
    std::vector<char> in(n, 0);
    for (int e : a) in[e] = 1;
    SplitterReport r;
    r.subset = std::move(a);
    int ref = r.subset.front();
    for (int s = 0; s < n; ++s) {
        if (in[s]) continue;
        for (int m : r.subset) {
            if (!h.same(s, ref, m)) {
                r.splitters.push_back(s);
                break;
            }
        }
    }
    r.count = static_cast<int>(r.splitters.size());
    return r;
}

bool is_module(const HomogeneousRelation& h, const std::vector<int>& a) {
    if (a.size() <= 1) return true;
    if (static_cast<int>(a.size()) >= h.size()) return true;
    return splitters(h, a).count == 0;
}

std::vector<int> smallest_module(const HomogeneousRelation& h, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("smallest_module: empty seed");
    int n = h.size();
    int x = *std::min_element(s.begin(), s.end()); // anchor
    std::vector<char> in_m(n, 0), in_f(n, 0);
    in_m[x] = 1;
    std::vector<int> frontier;
    for (int e : s)
        if (e != x && !in_f[e]) { in_f[e] = 1; frontier.push_back(e); }
    while (!frontier.empty()) {
        int y = frontier.back();
        frontier.pop_back();
        in_f[y] = 0;
        in_m[y] = 1;
        for (int z = 0; z < n; ++z) {
            if (in_m[z] || in_f[z]) continue;
            if (!h.same(z, x, y)) { in_f[z] = 1; frontier.push_back(z); }
        }
    }
    std::vector<int> m;
    for (int e = 0; e < n; ++e)
        if (in_m[e]) m.push_back(e);
    return m;
}

SetFamily max_modules_excluding(const HomogeneousRelation& h, int x) {
    int n = h.size();
    if (n < 2) throw std::invalid_argument("max_modules_excluding: need n >= 2");
    Partition p(n, h.row_classes(x));

    // FIFO active-pivot queue; a pivot re-enters when its part is split and
    // then only examines the parts descending from the old part's segment.
    std::deque<int> queue;
    std::vector<char> queued(n, 0);
    std::vector<Partition::Group> scope(n);
    for (int e = 0; e < n; ++e) {
        if (e == x) continue;
        queue.push_back(e);
        queued[e] = 1;
        scope[e] = p.whole();
    }
    std::vector<Partition::Group> old_segments;
    while (!queue.empty()) {
        int y = queue.front();
        queue.pop_front();
        queued[y] = 0;
        old_segments.clear();
        p.refine_by_pivot(h, y, scope[y], &old_segments);
        for (const auto& seg : old_segments) {
            for (int pos = seg.lo; pos < seg.hi; ++pos) {
                int z = p.element_at(pos);
                if (queued[z]) {
                    scope[z].lo = std::min(scope[z].lo, seg.lo);
                    scope[z].hi = std::max(scope[z].hi, seg.hi);
                } else {
                    queue.push_back(z);
                    queued[z] = 1;
                    scope[z] = seg;
                }
            }
        }
    }

    SetFamily out;
    out.ground = n;
    out.members = p.parts_in_order();
    for (auto& m : out.members) std::sort(m.begin(), m.end());
    return out;
}

bool is_prime(const HomogeneousRelation& h) {
    int n = h.size();
    if (n <= 2) return true;
    for (int v : {0, 1}) {
        auto maxm = max_modules_excluding(h, v);
        for (const auto& part : maxm.members)
            if (part.size() >= 2) return false;
    }
    return smallest_module(h, {0, 1}).size() == static_cast<size_t>(n);
}

} // namespace homrel
