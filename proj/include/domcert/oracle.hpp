#pragma once

#include "domcert/graph.hpp"
#include "domcert/pw_system.hpp"

namespace domcert {

// Exhaustive counts by direct definition (guarded to n <= 24).
BigInt count_bruteforce(const Graph &g, const Problem &pr);

// Count vector over separator-tuple states of the open (uncompleted) graph,
// indexed exactly like the transfer system's coordinates (before pruning).
IntVector psi_bruteforce(const Graph &open, const std::vector<int> &separator,
                         const Problem &pr);

struct CrossValidateResult {
    long cases = 0;
    long mismatches = 0;
    std::string first_mismatch;
    bool ok() const { return mismatches == 0 && cases > 0; }
};

// Pathwidth-k scripts: exhaustive over all descriptor sequences of length up
// to max_steps when samples == 0, otherwise `samples` random scripts of
// length up to max_steps.  Checks counts for every completion mask, and psi
// vectors for the generic modes.
CrossValidateResult cross_validate_pw(const Problem &pr, int k, int max_steps, int samples,
                                      uint32_t seed);

// Random tree (and forest, when with_union) scripts with up to max_leaves
// leaves, counts checked against brute force.
CrossValidateResult cross_validate_trees(const Problem &pr, bool with_union, int max_leaves,
                                         int samples, uint32_t seed);

}  // namespace domcert
