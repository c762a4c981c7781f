#include "homrel/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace homrel::oracle {

std::vector<int> mask_to_set(uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1) out.push_back(i);
    return out;
}

uint32_t set_to_mask(const std::vector<int>& s) {
    uint32_t m = 0;
    for (int e : s) m |= 1u << e;
    return m;
}

namespace {

void check_cap(const HomogeneousRelation& h) {
    if (h.size() > kMaxGroundSize)
        throw std::invalid_argument("oracle: ground set exceeds the n <= 16 cap");
}

bool mask_is_module(const HomogeneousRelation& h, uint32_t m) {
    int n = h.size();
    int ref = std::countr_zero(m);
    for (int s = 0; s < n; ++s) {
        if (m >> s & 1) continue;
        for (int e = ref + 1; e < n; ++e)
            if ((m >> e & 1) && !h.same(s, ref, e)) return false;
    }
    return true;
}

bool masks_overlap(uint32_t a, uint32_t b) {
    return (a & b) && (a & ~b) && (b & ~a);
}

// child-index subsets of a node whose union is a module
std::unordered_set<uint32_t> child_union_modules(const std::vector<uint32_t>& child_masks,
        const std::unordered_set<uint32_t>& modules) {
    int k = static_cast<int>(child_masks.size());
    std::unordered_set<uint32_t> u;
    for (uint32_t sub = 1; sub < (1u << k); ++sub) {
        uint32_t un = 0;
        for (int i = 0; i < k; ++i)
            if (sub >> i & 1) un |= child_masks[i];
        if (modules.count(un)) u.insert(sub);
    }
    return u;
}

bool order_is_linear(const std::vector<int>& order,
                     const std::unordered_set<uint32_t>& u) {
    int k = static_cast<int>(order.size());
    if (static_cast<int>(u.size()) != k * (k + 1) / 2) return false;
    for (int i = 0; i < k; ++i) {
        uint32_t run = 0;
        for (int j = i; j < k; ++j) {
            run |= 1u << order[j];
            if (!u.count(run)) return false;
        }
    }
    return true;
}

// Degenerate: all child unions are modules.  Prime: only singletons and the
// full set.  Linear: child orders searched exhaustively for k <= 8, greedy
// path construction (validated afterwards) beyond.
void type_tree_node(Tree& t, int node, const std::unordered_set<uint32_t>& modules) {
    auto& nd = t.nodes[node];
    int k = static_cast<int>(nd.children.size());
    std::vector<uint32_t> child_masks;
    for (int c : nd.children) child_masks.push_back(set_to_mask(t.nodes[c].elements));
    auto u = child_union_modules(child_masks, modules);

    if (static_cast<int>(u.size()) == (1 << k) - 1) {
        nd.kind = NodeKind::Degenerate;
        return;
    }
    bool prime = static_cast<int>(u.size()) == k + 1;
    if (prime) {
        for (int i = 0; i < k; ++i)
            if (!u.count(1u << i)) { prime = false; break; }
        if (prime && !u.count((1u << k) - 1)) prime = false;
    }
    if (prime) {
        nd.kind = NodeKind::Prime;
        return;
    }

    std::vector<int> linear;
    if (k <= 8) {
        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;
        do {
            if (order_is_linear(order, u)) { linear = order; break; }
        } while (std::next_permutation(order.begin(), order.end()));
    } else {
        // pair-module adjacency forms a Hamiltonian path for linear nodes
        std::vector<std::vector<int>> adj(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (u.count((1u << i) | (1u << j))) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
        int start = -1;
        for (int i = 0; i < k; ++i)
            if (adj[i].size() == 1) { start = i; break; }
        if (start >= 0) {
            std::vector<char> used(k, 0);
            std::vector<int> path{start};
            used[start] = 1;
            while (static_cast<int>(path.size()) < k) {
                int cur = path.back(), nxt = -1;
                for (int v : adj[cur])
                    if (!used[v]) { nxt = v; break; }
                if (nxt < 0) break;
                used[nxt] = 1;
                path.push_back(nxt);
            }
            if (static_cast<int>(path.size()) == k && order_is_linear(path, u))
                linear = path;
        }
    }
    if (!linear.empty()) {
        if (t.nodes[nd.children[linear.front()]].elements.front() >
            t.nodes[nd.children[linear.back()]].elements.front())
            std::reverse(linear.begin(), linear.end());
        std::vector<int> reordered;
        for (int i : linear) reordered.push_back(nd.children[i]);
        nd.children = reordered;
        nd.kind = NodeKind::Linear;
        return;
    }
    nd.kind = NodeKind::Prime; // untypable outside the weakly partitive case
}

} // namespace

OracleReport all_modules(const HomogeneousRelation& h) {
    check_cap(h);
    int n = h.size();
    OracleReport r;
    r.n = n;
    uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (uint32_t m = 1; m <= full; ++m)
        if (mask_is_module(h, m)) r.modules.push_back(m);

    for (uint32_t a : r.modules) {
        bool strong = true;
        for (uint32_t b : r.modules)
            if (masks_overlap(a, b)) { strong = false; break; }
        if (strong) r.strong.push_back(a);
    }

    std::vector<std::vector<int>> strong_sets;
    for (uint32_t m : r.strong) strong_sets.push_back(mask_to_set(m));
    r.tree = tree_from_sets(n, std::move(strong_sets));
    std::unordered_set<uint32_t> module_set(r.modules.begin(), r.modules.end());
    for (int i = 0; i < r.tree.size(); ++i)
        if (!r.tree.nodes[i].children.empty()) type_tree_node(r.tree, i, module_set);
    return r;
}

std::vector<int> oracle_z(const HomogeneousRelation& h, int x, int y) {
    check_cap(h);
    uint32_t z = 0;
    uint32_t full = (1u << h.size()) - 1;
    for (uint32_t m = 1; m <= full; ++m)
        if ((m >> x & 1) && !(m >> y & 1) && mask_is_module(h, m)) z |= m;
    return mask_to_set(z);
}

SetFamily oracle_maxm(const HomogeneousRelation& h, int x) {
    check_cap(h);
    auto report = all_modules(h);
    std::vector<uint32_t> excluding;
    for (uint32_t m : report.modules)
        if (!(m >> x & 1)) excluding.push_back(m);
    SetFamily out;
    out.ground = h.size();
    for (uint32_t m : excluding) {
        bool maximal = true;
        for (uint32_t other : excluding)
            if (other != m && (m & other) == m) { maximal = false; break; }
        if (maximal) out.members.push_back(mask_to_set(m));
    }
    std::sort(out.members.begin(), out.members.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

bool oracle_lattice_check(const HomogeneousRelation& h) {
    check_cap(h);
    auto report = all_modules(h);
    std::unordered_set<uint32_t> family(report.modules.begin(), report.modules.end());
    family.insert(0);
    for (uint32_t a : family)
        for (uint32_t b : family) {
            if (!family.count(a & b)) return false;
            // supremum: the unique smallest member containing a | b
            uint32_t best = 0;
            bool found = false;
            for (uint32_t c : family)
                if ((c & (a | b)) == (a | b)) {
                    if (!found || std::popcount(c) < std::popcount(best)) {
                        best = c;
                        found = true;
                    }
                }
            if (!found) return false;
            for (uint32_t c : family)
                if ((c & (a | b)) == (a | b) && (best & c) != best) return false;
        }
    return true;
}

} // namespace homrel::oracle
