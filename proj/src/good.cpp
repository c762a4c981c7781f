#include "homrel/good.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "homrel/modules.hpp"

namespace homrel {

QuotientResult quotient_relation(const HomogeneousRelation& h,
                                 const std::vector<std::vector<int>>& parts,
                                 std::optional<int> anchor) {
    std::vector<int> reps;
    for (const auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("quotient_relation: empty part");
        reps.push_back(*std::min_element(p.begin(), p.end()));
    }
    if (anchor) reps.push_back(*anchor);
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return QuotientResult{induced(h, reps), std::move(reps)};
}

Digraph forcing_graph(const HomogeneousRelation& h, const SetFamily& maxm, int x) {
    int k = static_cast<int>(maxm.members.size());
    std::vector<int> rep(k);
    for (int i = 0; i < k; ++i)
        rep[i] = *std::min_element(maxm.members[i].begin(), maxm.members[i].end());
    Digraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            if (!h.same(rep[j], x, rep[i])) g.add_arc(i, j);
        }
    return g;
}

namespace {

// Strongly connected components, listed in completion order: every arc
// leaving a component points into an earlier one in the list.
std::vector<std::vector<int>> scc_completion_order(const Digraph& g) {
    int n = g.size();
    std::vector<int> index(n, -1), low(n, 0), stk;
    std::vector<int> frame_v, frame_i;
    std::vector<char> onstack(n, 0);
    std::vector<std::vector<int>> comps;
    int counter = 0;
    for (int s = 0; s < n; ++s) {
        if (index[s] >= 0) continue;
        index[s] = low[s] = counter++;
        stk.push_back(s);
        onstack[s] = 1;
        frame_v.push_back(s);
        frame_i.push_back(0);
        while (!frame_v.empty()) {
            int v = frame_v.back();
            if (frame_i.back() < n) {
                int w = frame_i.back()++;
                if (w == v || !g.has_arc(v, w)) continue;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stk.push_back(w);
                    onstack[w] = 1;
                    frame_v.push_back(w);
                    frame_i.push_back(0);
                } else if (onstack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                frame_v.pop_back();
                frame_i.pop_back();
                if (!frame_v.empty())
                    low[frame_v.back()] = std::min(low[frame_v.back()], low[v]);
                if (low[v] == index[v]) {
                    std::vector<int> comp;
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        onstack[w] = 0;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
            }
        }
    }
    return comps;
}

} // namespace

XBranch x_branch(const HomogeneousRelation& h, const SetFamily& maxm, int x) {
    Digraph g = forcing_graph(h, maxm, x);
    auto comps = scc_completion_order(g);
    int k = g.size();
    std::vector<int> outdeg(k, 0), indeg(k, 0);
    for (int u = 0; u < k; ++u)
        for (int w = 0; w < k; ++w)
            if (u != w && g.has_arc(u, w)) { ++outdeg[u]; ++indeg[w]; }
    auto false_twins = [&](int u, int v) {
        if (g.has_arc(u, v) || g.has_arc(v, u)) return false;
        for (int w = 0; w < k; ++w) {
            if (w == u || w == v) continue;
            if (g.has_arc(u, w) != g.has_arc(v, w)) return false;
            if (g.has_arc(w, u) != g.has_arc(w, v)) return false;
        }
        return true;
    };

    XBranch b;
    b.maxm = maxm;
    std::vector<char> used(comps.size(), 0);
    for (size_t i = 0; i < comps.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        if (comps[i].size() > 1) { // companion elements under a prime node
            b.groups.push_back(comps[i]);
            continue;
        }
        int v = comps[i][0];
        std::vector<int> group{v};
        // a false twin is the companion under a linear node; it has the same
        // descendants, so pulling it adjacent keeps the order topological
        for (size_t j = i + 1; j < comps.size(); ++j) {
            if (used[j] || comps[j].size() != 1) continue;
            int w = comps[j][0];
            if (outdeg[w] != outdeg[v] || indeg[w] != indeg[v]) continue;
            if (false_twins(v, w)) {
                group.push_back(w);
                used[j] = 1;
                break;
            }
        }
        b.groups.push_back(std::move(group));
    }
    return b;
}

XBranch x_branch(const HomogeneousRelation& h, int x) {
    return x_branch(h, max_modules_excluding(h, x), x);
}

namespace {

int build_smdt(const HomogeneousRelation& h, const std::vector<int>& elems, Tree& t,
               const GoodOptions& opts) {
    if (elems.size() == 1) {
        t.nodes.push_back(TreeNode{elems, NodeKind::Leaf, -1, {}});
        return static_cast<int>(t.nodes.size()) - 1;
    }
    HomogeneousRelation hr = induced(h, elems); // local i <-> elems[i]
    auto branch = x_branch(hr, 0);              // x = smallest element

    std::vector<std::vector<int>> parts_global(branch.maxm.members.size());
    for (size_t i = 0; i < branch.maxm.members.size(); ++i)
        for (int e : branch.maxm.members[i]) parts_global[i].push_back(elems[e]);

    t.nodes.push_back(TreeNode{{elems[0]}, NodeKind::Leaf, -1, {}});
    int cur = static_cast<int>(t.nodes.size()) - 1;
    std::vector<int> cur_set{elems[0]};
    for (const auto& grp : branch.groups) {
        std::vector<int> children{cur};
        for (int pi : grp) {
            children.push_back(build_smdt(h, parts_global[pi], t, opts));
            cur_set.insert(cur_set.end(), parts_global[pi].begin(), parts_global[pi].end());
        }
        std::sort(cur_set.begin(), cur_set.end());
        if (opts.defensive && !is_module(h, cur_set))
            throw DefensiveCheckError("smdt: chain step is not a module; relation is not good");
        TreeNode node;
        node.elements = cur_set;
        node.kind = NodeKind::Node;
        node.children = children;
        t.nodes.push_back(std::move(node));
        int id = static_cast<int>(t.nodes.size()) - 1;
        for (int c : children) t.nodes[c].parent = id;
        cur = id;
    }
    return cur;
}

bool pair_module(const HomogeneousRelation& q, int a, int b) {
    int k = q.size();
    for (int s = 0; s < k; ++s) {
        if (s == a || s == b) continue;
        if (!q.same(s, a, b)) return false;
    }
    return true;
}

// Hamiltonian path of the pair-module graph on the quotient's elements,
// empty when the graph is not a path.
std::vector<int> pair_module_path(const HomogeneousRelation& q) {
    int k = q.size();
    std::vector<std::vector<int>> adj(k);
    int edges = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (pair_module(q, i, j)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                ++edges;
            }
    if (edges != k - 1) return {};
    int start = -1, deg1 = 0;
    for (int i = 0; i < k; ++i) {
        if (adj[i].size() > 2) return {};
        if (adj[i].size() == 1) {
            ++deg1;
            if (start < 0) start = i;
        }
    }
    if (deg1 != 2) return {};
    std::vector<int> path{start};
    std::vector<char> used(k, 0);
    used[start] = 1;
    while (static_cast<int>(path.size()) < k) {
        int cur = path.back(), nxt = -1;
        for (int v : adj[cur])
            if (!used[v]) { nxt = v; break; }
        if (nxt < 0) return {};
        used[nxt] = 1;
        path.push_back(nxt);
    }
    return path;
}

std::vector<int> tree_post_order(const Tree& t) {
    std::vector<int> order, stack{t.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int c : t.nodes[v].children) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

void retype_or_fail(const HomogeneousRelation& h, Tree& t, int ni,
                    const GoodOptions& opts) {
    if (type_node(h, t, ni)) return;
    if (opts.defensive)
        throw DefensiveCheckError("decompose: untypable quotient; relation is not good");
    t.nodes[ni].kind = NodeKind::Prime;
}

} // namespace

bool type_node(const HomogeneousRelation& h, Tree& t, int ni) {
    auto& nd = t.nodes[ni];
    int k = static_cast<int>(nd.children.size());
    std::vector<std::pair<int, int>> reps; // (representative, child id)
    reps.reserve(k);
    for (int c : nd.children) reps.emplace_back(t.nodes[c].elements.front(), c);
    std::sort(reps.begin(), reps.end());
    std::vector<int> rep_elems;
    rep_elems.reserve(k);
    for (auto& [e, c] : reps) rep_elems.push_back(e);
    HomogeneousRelation q = induced(h, rep_elems); // local i <-> reps[i]

    auto sort_children = [&] {
        std::sort(nd.children.begin(), nd.children.end(), [&](int a, int b) {
            return t.nodes[a].elements.front() < t.nodes[b].elements.front();
        });
    };
    bool complete = true;
    for (int i = 0; i < k && complete; ++i)
        if (q.class_count(i) != 1) complete = false;
    if (complete) { // includes the 2-child case by convention
        nd.kind = NodeKind::Degenerate;
        sort_children();
        return true;
    }
    if (is_prime(q)) {
        nd.kind = NodeKind::Prime;
        sort_children();
        return true;
    }
    auto path = pair_module_path(q);
    if (path.empty()) return false;
    std::vector<int> children;
    children.reserve(k);
    for (int l : path) children.push_back(reps[l].second);
    if (t.nodes[children.front()].elements.front() >
        t.nodes[children.back()].elements.front())
        std::reverse(children.begin(), children.end());
    nd.children = std::move(children);
    nd.kind = NodeKind::Linear;
    return true;
}

Tree smdt(const HomogeneousRelation& h, const GoodOptions& opts) {
    int n = h.size();
    if (n < 1) throw std::invalid_argument("smdt: empty ground set");
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    Tree t;
    t.root = build_smdt(h, all, t, opts);
    return t;
}

Tree remove_weak_and_finalize(const HomogeneousRelation& h, Tree t,
                              const GoodOptions& opts) {
    auto order = tree_post_order(t);
    for (int ni : order)
        if (!t.nodes[ni].children.empty()) retype_or_fail(h, t, ni, opts);

    for (int ni : order) {
        auto& nd = t.nodes[ni];
        if (nd.children.empty() || nd.parent < 0) continue;
        int f = nd.parent;
        // a prime quotient has no nontrivial module, so no child of a
        // prime-typed node can be merged away
        if (t.nodes[f].kind == NodeKind::Prime) continue;
        auto& fc = t.nodes[f].children;
        int p = static_cast<int>(std::find(fc.begin(), fc.end(), ni) - fc.begin());
        std::vector<int> sibs;
        if (t.nodes[f].kind == NodeKind::Linear) { // only adjacent runs matter
            if (p > 0) sibs.push_back(fc[p - 1]);
            if (p + 1 < static_cast<int>(fc.size())) sibs.push_back(fc[p + 1]);
        } else {
            sibs.push_back(fc[p == 0 ? 1 : 0]);
        }
        int b = t.nodes[nd.children.front()].elements.front();
        int c = t.nodes[nd.children.back()].elements.front();
        // this node is weak iff some module overlaps it.  A module holding a
        // sibling element and a border element of a strong node must swallow
        // the node whole; for a weak node at least one such probe stays
        // strictly smaller.
        bool weak = false;
        for (int sib : sibs) {
            int a = t.nodes[sib].elements.front();
            for (int e : {b, c}) {
                auto sm = smallest_module(h, {a, e});
                if (!std::includes(sm.begin(), sm.end(), nd.elements.begin(),
                                   nd.elements.end())) {
                    weak = true;
                    break;
                }
            }
            if (weak) break;
        }
        if (!weak) continue;
        std::vector<int> kids = nd.children;
        fc.erase(fc.begin() + p);
        fc.insert(fc.begin() + p, kids.begin(), kids.end());
        for (int kid : kids) t.nodes[kid].parent = f;
        nd.children.clear(); // ni now unreachable from the root
        retype_or_fail(h, t, f, opts);
    }

    // compact the survivors, preserving children order
    Tree out;
    std::vector<std::pair<int, int>> stack{{t.root, -1}};
    while (!stack.empty()) {
        auto [ni, parent] = stack.back();
        stack.pop_back();
        TreeNode node;
        node.elements = std::move(t.nodes[ni].elements);
        node.kind = t.nodes[ni].kind;
        node.parent = parent;
        out.nodes.push_back(std::move(node));
        int id = static_cast<int>(out.nodes.size()) - 1;
        if (parent >= 0) out.nodes[parent].children.push_back(id);
        const auto& kids = t.nodes[ni].children;
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            stack.push_back({*it, id});
    }
    out.root = 0;
    if (opts.defensive)
        for (const auto& node : out.nodes)
            if (!is_module(h, node.elements))
                throw DefensiveCheckError("decompose: tree node is not a module");
    return out;
}

Tree decompose(const HomogeneousRelation& h, const GoodOptions& opts) {
    return remove_weak_and_finalize(h, smdt(h, opts), opts);
}

} // namespace homrel
