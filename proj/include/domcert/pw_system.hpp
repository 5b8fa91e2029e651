#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "domcert/automata.hpp"

namespace domcert {

using BigInt = mpz_class;
using IntMatrix = std::vector<std::vector<BigInt>>;  // [new][old]
using IntVector = std::vector<BigInt>;

// Transfer-operator system for graphs given by width-k extension sequences.
// Count vectors transform as psi' = M psi; a run of length L plus completion
// mask c counts sets on the (k+L)-vertex completed graph as
// completions[c] . (M_L ... M_1) v.
struct OperatorSystem {
    Problem problem;
    int k = 1;
    int m = 0;                              // current dimension
    std::vector<Descriptor> descriptors;    // aligned with mats
    std::vector<IntMatrix> mats;
    std::vector<IntVector> completions;     // one per completion edge mask
    IntVector v;
    std::vector<int> index_map;             // coordinate -> original tuple state
    std::vector<std::string> state_names;   // aligned with coordinates

    uint64_t fingerprint() const;
};

OperatorSystem build_system(const Problem &pr, int k);

// Keeps only coordinates reachable from v and co-reachable from some
// completion vector; projects everything.
void prune_accessibility(OperatorSystem &sys);

// Removes matrices dominated entrywise by another matrix (sound for growth
// bounds, not for counting).
void prune_dominated(OperatorSystem &sys);

BigInt evaluate_count(const OperatorSystem &sys, const std::vector<Descriptor> &seq,
                      unsigned completion_mask);
IntVector evaluate_psi(const OperatorSystem &sys, const std::vector<Descriptor> &seq);

// Extension-sequence file: one `keep=<pos|new> edges=<bits>` line per step,
// final `complete edges=<bits>`.  keep=p puts the new vertex at slot p
// (forgetting the old occupant); keep=new forgets the new vertex itself.
struct ExtensionScript {
    int k = 1;
    std::vector<Descriptor> steps;
    unsigned completion_mask = 0;
};

ExtensionScript parse_extension_script(std::istream &in, int k);
std::string format_extension_script(const ExtensionScript &s);

}  // namespace domcert
