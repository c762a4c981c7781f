#pragma once

#include <optional>
#include <vector>

#include "homrel/relation.hpp"

namespace homrel {

// Failing triple for the graphic-style symmetry axiom.
struct TripleWitness {
    int x = -1, y = -1, z = -1;
};

// Failing 4-tuple for the digraphic exchange axiom.
struct QuadWitness {
    int x = -1, y = -1, s = -1, t = -1;
};

// H(y|xz) and H(z|xy) imply H(x|yz), for all diverse triples.
bool is_weakly_graphic(const HomogeneousRelation& h,
                       TripleWitness* witness = nullptr);

// H(s|xy), H(t|xy), H(y|sx) and H(y|tx) imply H(x|st), over pairwise
// distinct x, y, s, t.
bool is_weakly_digraphic(const HomogeneousRelation& h,
                         QuadWitness* witness = nullptr);

struct QuotientWitness {
    std::vector<int> module; // the module M with x, y inside, s, t outside
    int x = -1, y = -1, s = -1, t = -1;
};

struct QuotientCheck {
    bool ok = true;
    // True when the answer is definitive: all modules examined (n <= 16), or
    // a violation found.  Above the cap only the smallest modules SM({x,y})
    // are checked, so a positive answer is necessary-only.
    bool exact = true;
    std::optional<QuotientWitness> witness;
};

// Good relations: for every module M, x, y in M and s, t outside, H(x|st)
// iff H(y|st).  Equivalently, rows of elements of M agree outside M.
QuotientCheck is_modular_quotient(const HomogeneousRelation& h);

// Reconstruction of an undirected graph / tournament whose standard relation
// equals h, when one exists.  Returns nothing when h is not of that kind.
std::optional<Digraph> recognize_graphic(const HomogeneousRelation& h);
std::optional<Digraph> recognize_tournamental(const HomogeneousRelation& h);

} // namespace homrel
