#pragma once

#include <string>
#include <vector>

namespace homrel {

// Node kinds: Node is an untyped internal node (generalized trees and SMDTs);
// Prime / Degenerate / Linear are the typed kinds of decomposition trees.
// Children order is semantically significant only for Linear nodes.
enum class NodeKind { Leaf, Node, Prime, Degenerate, Linear };

const char* kind_name(NodeKind k);

struct TreeNode {
    std::vector<int> elements; // sorted
    NodeKind kind = NodeKind::Node;
    int parent = -1;
    std::vector<int> children;
};

struct Tree {
    std::vector<TreeNode> nodes;
    int root = -1;

    int size() const { return static_cast<int>(nodes.size()); }
    const TreeNode& at(int i) const { return nodes[i]; }

    // All node element sets, sorted for comparison between algorithms.
    std::vector<std::vector<int>> node_sets() const;

    // Leaf elements in depth-first order following stored children order.
    std::vector<int> dfs_leaf_order() const;

    int max_children() const;
};

// Builds the inclusion tree of a laminar collection of sets over 0..n-1.
// The root X and the singletons are added if missing.  Children are ordered
// by smallest element.  Throws if the collection is not laminar.
Tree tree_from_sets(int n, std::vector<std::vector<int>> sets);

} // namespace homrel
