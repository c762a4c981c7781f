#include "homrel/factperm.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "homrel/modules.hpp"

namespace homrel {

namespace {

// Static range max/min with O(1) queries.
struct SparseTable {
    std::vector<std::vector<int>> t;
    bool maximum;

    SparseTable(const std::vector<int>& a, bool maximum) : maximum(maximum) {
        int n = static_cast<int>(a.size());
        int lg = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(n))));
        t.assign(lg, a);
        for (int k = 1; k < lg; ++k)
            for (int i = 0; i + (1 << k) <= n; ++i)
                t[k][i] = pick(t[k - 1][i], t[k - 1][i + (1 << (k - 1))]);
    }

    int pick(int x, int y) const { return maximum ? std::max(x, y) : std::min(x, y); }

    int query(int lo, int hi) const { // inclusive, lo <= hi
        int k = std::bit_width(static_cast<unsigned>(hi - lo + 1)) - 1;
        return pick(t[k][lo], t[k][hi - (1 << k) + 1]);
    }
};

} // namespace

Tree tree_from_permutation(const HomogeneousRelation& h, const std::vector<int>& sigma,
                           const FactPermOptions& opts, FactPermStats* stats) {
    int n = h.size();
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("tree_from_permutation: order has wrong length");
    {
        std::vector<char> seen(n, 0);
        for (int e : sigma) {
            if (e < 0 || e >= n || seen[e])
                throw std::invalid_argument("tree_from_permutation: not a permutation");
            seen[e] = 1;
        }
    }
    if (n == 0) throw std::invalid_argument("tree_from_permutation: empty ground set");

    // Both lists are kept reversed: back() is the front member.  rf holds
    // right boundaries of right-free intervals starting at the current
    // position; ds[q] holds the splitters of interval (i, rf[q]) not already
    // accounted for by later members, so prefix unions from the front are the
    // full splitter sets.
    std::vector<int> rf;
    std::vector<std::vector<int>> ds;
    std::vector<int> where(n, -1); // element -> ds bucket, -1 if absent
    std::vector<std::pair<int, int>> collected;

    auto erase_from_bucket = [&](int e) {
        auto& b = ds[where[e]];
        b.erase(std::find(b.begin(), b.end(), e));
        where[e] = -1;
    };

    for (int i = n - 1; i >= 0; --i) {
        int x = sigma[i];
        if (where[x] >= 0) erase_from_bucket(x); // x is inside every interval now
        int r = -1;
        if (i + 1 < n) {
            int y = sigma[i + 1];
            for (int l = 0; l < n; ++l) {
                if (l == i || l == i + 1) continue;
                int s = sigma[l];
                if (h.same(s, x, y)) continue;
                r = std::max(r, l);
                if (l < i) {
                    // a splitter of the pair {x, y} splits every current
                    // interval, so it moves to the front member
                    if (where[s] == static_cast<int>(ds.size()) - 1) continue;
                    if (where[s] >= 0) erase_from_bucket(s);
                    ds.back().push_back(s);
                    where[s] = static_cast<int>(ds.size()) - 1;
                    if (stats) ++stats->delta_insertions;
                }
            }
        }
        // boundaries with a splitter on their right can no longer close a
        // strong module; drop them and fold their splitters into the next
        while (!rf.empty() && rf.back() < r) {
            rf.pop_back();
            std::vector<int> fst = std::move(ds.back());
            ds.pop_back();
            if (ds.empty()) {
                for (int e : fst) where[e] = -1;
            } else {
                for (int e : fst) {
                    ds.back().push_back(e);
                    where[e] = static_cast<int>(ds.size()) - 1;
                }
            }
        }
        rf.push_back(i);
        ds.emplace_back();

        // intervals whose splitter prefix is all-empty are modules
        for (int q = static_cast<int>(ds.size()) - 1; q >= 0 && ds[q].empty(); --q)
            collected.emplace_back(i, rf[q]);

        if (opts.check_invariant) {
            std::vector<int> prefix;
            for (int q = static_cast<int>(ds.size()) - 1; q >= 0; --q) {
                prefix.insert(prefix.end(), ds[q].begin(), ds[q].end());
                std::vector<int> interval(sigma.begin() + i, sigma.begin() + rf[q] + 1);
                auto sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                if (splitters(h, interval).splitters != sorted)
                    throw DefensiveCheckError(
                        "factoring sweep: splitter bookkeeping out of sync at position " +
                        std::to_string(i));
            }
        }
    }

    if (stats) stats->collected_intervals = static_cast<int>(collected.size());

    // weak members are the intervals overlapped by another collected interval
    std::vector<int> max_end_at(n, -1), min_start_at(n, n);
    for (auto [a, b] : collected) {
        max_end_at[a] = std::max(max_end_at[a], b);
        min_start_at[b] = std::min(min_start_at[b], a);
    }
    SparseTable right_reach(max_end_at, true), left_reach(min_start_at, false);

    std::vector<std::vector<int>> strong_sets;
    for (auto [a, b] : collected) {
        if (a < b && (right_reach.query(a + 1, b) > b || left_reach.query(a, b - 1) < a))
            continue;
        std::vector<int> elems(sigma.begin() + a, sigma.begin() + b + 1);
        std::sort(elems.begin(), elems.end());
        if (opts.validate_modules && !is_module(h, elems))
            throw DefensiveCheckError("factoring sweep: surviving interval is not a module");
        strong_sets.push_back(std::move(elems));
    }
    if (stats) stats->strong_intervals = static_cast<int>(strong_sets.size());

    try {
        return tree_from_sets(n, std::move(strong_sets));
    } catch (const std::invalid_argument& e) {
        throw DefensiveCheckError(
            std::string("factoring sweep: surviving intervals are not laminar: ") + e.what());
    }
}

std::vector<int> tournament_factoring_permutation(const Digraph& t) {
    if (!t.is_tournament())
        throw std::invalid_argument("tournament_factoring_permutation: not a tournament");
    int n = t.size();
    std::vector<std::vector<int>> segs;
    {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        segs.push_back(std::move(all));
    }
    for (size_t idx = 0; idx < segs.size();) {
        if (segs[idx].size() <= 1) { ++idx; continue; }
        int x = segs[idx][0];
        std::vector<int> in, out;
        for (int v : segs[idx])
            if (v != x) (t.has_arc(v, x) ? in : out).push_back(v);
        std::vector<std::vector<int>> repl;
        if (!in.empty()) repl.push_back(std::move(in));
        repl.push_back({x});
        if (!out.empty()) repl.push_back(std::move(out));
        segs.erase(segs.begin() + idx);
        segs.insert(segs.begin() + idx, std::make_move_iterator(repl.begin()),
                    std::make_move_iterator(repl.end()));
    }
    std::vector<int> order;
    order.reserve(n);
    for (const auto& s : segs) order.push_back(s[0]);
    return order;
}

} // namespace homrel
