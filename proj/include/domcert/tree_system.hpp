#pragma once

#include "domcert/graph.hpp"
#include "domcert/pw_system.hpp"

namespace domcert {

// Bilinear transfer system for trees (compose) and forests (compose + union)
// over 1-distinguished graphs.  phi[i][s1][s2] is the multiplicity with which
// roots in states s1 (kept) and s2 (finalized, joined by an edge) yield state
// i; delta is the same for disjoint union.
struct TreeSystem {
    Problem problem;
    int m = 0;
    std::vector<IntMatrix> phi;
    std::vector<IntMatrix> delta;  // empty unless built with unions
    IntVector v;
    IntVector p;  // acceptance of the final root
    std::vector<int> index_map;
    std::vector<std::string> state_names;

    bool has_delta() const { return !delta.empty(); }
    uint64_t fingerprint() const;
};

TreeSystem build_tree_system(const Problem &pr, bool with_union);
void prune_tree_system(TreeSystem &sys);

IntVector tree_psi(const TreeSystem &sys, const TreeScript &s);
BigInt tree_count(const TreeSystem &sys, const TreeScript &s);

}  // namespace domcert
