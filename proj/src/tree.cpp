#include "homrel/tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "homrel/set_family.hpp"

namespace homrel {

const char* kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Leaf: return "leaf";
        case NodeKind::Node: return "node";
        case NodeKind::Prime: return "prime";
        case NodeKind::Degenerate: return "degenerate";
        case NodeKind::Linear: return "linear";
    }
    return "?";
}

std::vector<std::vector<int>> Tree::node_sets() const {
    std::vector<std::vector<int>> out;
    out.reserve(nodes.size());
    for (const auto& n : nodes) out.push_back(n.elements);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> Tree::dfs_leaf_order() const {
    std::vector<int> out;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        const auto& n = nodes[i];
        if (n.children.empty()) {
            out.push_back(n.elements.front());
        } else {
            for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
                stack.push_back(*it);
        }
    }
    return out;
}

int Tree::max_children() const {
    int best = 0;
    for (const auto& n : nodes) best = std::max(best, static_cast<int>(n.children.size()));
    return best;
}

Tree tree_from_sets(int n, std::vector<std::vector<int>> sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    sets.push_back(all);
    for (int i = 0; i < n; ++i) sets.push_back({i});
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    Tree t;
    t.nodes.reserve(sets.size());
    for (auto& s : sets) {
        TreeNode node;
        node.kind = s.size() == 1 ? NodeKind::Leaf : NodeKind::Node;
        node.elements = std::move(s);
        t.nodes.push_back(std::move(node));
    }
    t.root = 0;
    // parent = the smallest strictly containing set; sets are size-sorted so
    // scanning earlier nodes backwards finds it first
    for (int i = 1; i < t.size(); ++i) {
        int parent = -1;
        for (int j = i - 1; j >= 0; --j) {
            if (t.nodes[j].elements.size() <= t.nodes[i].elements.size()) continue;
            if (std::includes(t.nodes[j].elements.begin(), t.nodes[j].elements.end(),
                              t.nodes[i].elements.begin(), t.nodes[i].elements.end())) {
                if (parent < 0 ||
                    t.nodes[j].elements.size() < t.nodes[parent].elements.size())
                    parent = j;
            }
        }
        if (parent < 0) throw std::invalid_argument("tree_from_sets: no parent found");
        if (overlaps(t.nodes[parent].elements, t.nodes[i].elements))
            throw std::invalid_argument("tree_from_sets: sets not laminar");
        t.nodes[i].parent = parent;
        t.nodes[parent].children.push_back(i);
    }
    // overlap between same-size or incomparable sets would leave an element in
    // two children of one node; detect by checking children partition parents
    for (int i = 0; i < t.size(); ++i) {
        const auto& node = t.nodes[i];
        if (node.children.empty()) continue;
        size_t covered = 0;
        for (int c : node.children) covered += t.nodes[c].elements.size();
        if (covered != node.elements.size())
            throw std::invalid_argument("tree_from_sets: sets not laminar");
    }
    for (auto& node : t.nodes) {
        std::sort(node.children.begin(), node.children.end(), [&](int a, int b) {
            return t.nodes[a].elements.front() < t.nodes[b].elements.front();
        });
    }
    return t;
}

} // namespace homrel
