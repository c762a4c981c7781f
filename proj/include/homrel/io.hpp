#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homrel/errors.hpp"
#include "homrel/relation.hpp"
#include "homrel/tree.hpp"

namespace homrel {

uint64_t fnv1a64(std::string_view data);

// Relation matrix file: n, then n*n class labels row by row (diagonal
// entries ignored).  Labels are arbitrary ints, re-canonicalized on load.
HomogeneousRelation read_relation(std::istream& in);
void write_relation(std::ostream& out, const HomogeneousRelation& h);

// Digraph file: "n m", then m lines "u v" (0-based).  In undirected mode
// each line is an edge and is expanded into both arcs.
Digraph read_digraph(std::istream& in, bool undirected);
void write_digraph(std::ostream& out, const Digraph& g, bool undirected);

// 2-structure file: n, then the n*n color matrix (diagonal ignored).
TwoStructure read_two_structure(std::istream& in);
void write_two_structure(std::ostream& out, const TwoStructure& t);

// Text rendering of a decomposition tree plus provenance metadata.  One node
// per line, indented two spaces per depth: internal nodes print their kind,
// leaves print "leaf <name>".  The elapsed time line is emitted only when
// set, keeping default output byte-deterministic.
struct TreeDocument {
    std::string algo;
    uint64_t input_hash = 0;
    std::vector<std::string> names; // per element
    Tree tree;
    std::optional<double> elapsed_ms;
};

std::string serialize_tree(const TreeDocument& doc);
TreeDocument parse_tree(const std::string& text);

std::vector<std::string> default_names(int n);

} // namespace homrel
