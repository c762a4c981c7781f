#pragma once

#include <cstdint>
#include <vector>

#include "homrel/relation.hpp"
#include "homrel/set_family.hpp"
#include "homrel/tree.hpp"

namespace homrel::oracle {

// Brute-force ground truth over all 2^n subsets.  Hard-capped at n <= 16.
inline constexpr int kMaxGroundSize = 16;

struct OracleReport {
    int n = 0;
    std::vector<uint32_t> modules; // bitset-encoded, ascending
    std::vector<uint32_t> strong;  // the non-overlapped modules, plus trivials
    Tree tree;                     // typed decomposition tree of the strong set
};

OracleReport all_modules(const HomogeneousRelation& h);

// Largest module containing x but not y (union of all such modules).
std::vector<int> oracle_z(const HomogeneousRelation& h, int x, int y);

// The maximal modules excluding x, ordered by smallest element.
SetFamily oracle_maxm(const HomogeneousRelation& h, int x);

// Checks that modules + empty set form a lattice under inclusion.
bool oracle_lattice_check(const HomogeneousRelation& h);

std::vector<int> mask_to_set(uint32_t mask);
uint32_t set_to_mask(const std::vector<int>& s);

} // namespace homrel::oracle
