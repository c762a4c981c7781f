#pragma once

#include <optional>
#include <vector>

#include "homrel/errors.hpp"
#include "homrel/relation.hpp"
#include "homrel/set_family.hpp"
#include "homrel/tree.hpp"

namespace homrel {

// Induced relation on one representative (the smallest element) per part,
// plus the anchor element if given.  For a good relation the result does not
// depend on the representative choice.
struct QuotientResult {
    HomogeneousRelation relation;
    std::vector<int> reps; // sorted ascending; reps[i] is local element i
};

QuotientResult quotient_relation(const HomogeneousRelation& h,
                                 const std::vector<std::vector<int>>& parts,
                                 std::optional<int> anchor = std::nullopt);

// Vertex i stands for part i of maxm; arc (i, j) iff the representative of
// part j separates x from the representative of part i, which forces every
// module containing x and part i to contain part j as well.
Digraph forcing_graph(const HomogeneousRelation& h, const SetFamily& maxm, int x);

// Parts of MaxM(x) bundled into the steps of the chain of modules containing
// x: the union of {x} and the parts of the first q groups is a module for
// every q.  Non-trivial strongly connected components of the forcing graph
// form one group (prime step), false-twin pairs form one group (linear
// step), the remaining vertices are their own group.
struct XBranch {
    SetFamily maxm;                       // parts of MaxM(x)
    std::vector<std::vector<int>> groups; // indices into maxm.members
};

XBranch x_branch(const HomogeneousRelation& h, int x);
XBranch x_branch(const HomogeneousRelation& h, const SetFamily& maxm, int x);

struct GoodOptions {
    // re-verify that every produced node is a module; throws
    // DefensiveCheckError when the input relation is not good
    bool defensive = false;
};

// Super-tree: every node is a module and every strong module is a node, but
// weak modules may appear and nodes are untyped.  Assumes h is good
// (modular quotient); on other inputs the result is unspecified unless
// defensive checking is on.
Tree smdt(const HomogeneousRelation& h, const GoodOptions& opts = {});

// Types node `node` of t from the quotient on one representative per child:
// complete -> Degenerate, no nontrivial module -> Prime, pair-module graph a
// Hamiltonian path -> Linear (children stored in path order, smaller first
// element in front).  Returns false when none fits (h not good there).
bool type_node(const HomogeneousRelation& h, Tree& t, int node);

// Weak-node elimination: types every internal node, removes the nodes that
// are overlapped by another module (probed with smallest_module over a
// sibling and a border element; children of prime-typed nodes are always
// strong), retypes on the way, and returns the compacted decomposition tree.
Tree remove_weak_and_finalize(const HomogeneousRelation& h, Tree t,
                              const GoodOptions& opts = {});

// Modular decomposition tree of a good relation: smdt, then
// remove_weak_and_finalize.
Tree decompose(const HomogeneousRelation& h, const GoodOptions& opts = {});

} // namespace homrel
