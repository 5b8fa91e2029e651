#pragma once

#include "domcert/numbers.hpp"
#include "domcert/pw_system.hpp"
#include "domcert/tree_system.hpp"

namespace domcert {

using AlgVector = std::vector<AlgebraicNumber>;

bool alg_vector_eq(const AlgVector &a, const AlgVector &b);  // exact (coefficient) equality
bool alg_vector_le(const AlgVector &a, const AlgVector &b);  // coordinatewise, exact signs

struct Membership {
    bool inside = false;
    std::vector<AlgebraicNumber> lambda;  // convex coefficients, aligned with X
};

// Decides { lambda >= 0, sum lambda = 1, sum lambda_j X_j >= point } by an
// exact phase-1 simplex (smallest-index pivot rule).  A returned witness is
// re-checked by plain arithmetic before it is trusted.
Membership member_conv_le(const std::vector<AlgVector> &X, const AlgVector &point);

// Scans in insertion order and drops every point that lies in conv_<= of the
// remaining ones; the downward convex hull is unchanged.
std::vector<AlgVector> hull_le(std::vector<AlgVector> X);

struct Limits {
    size_t max_points = 5000;
    int max_rounds = 200;
    double time_limit = 0;  // seconds; 0 = unlimited
    int workers = 0;        // 0 = hardware default
};

// Self-contained, independently re-checkable growth-rate claim:
// count(n) <= constant * alpha^n over the stated graph class.
struct Certificate {
    FieldPtr field;
    AlgebraicNumber alpha;
    Problem problem;
    std::string graph_class;  // pw1 | pw2 | tree | forest
    uint64_t system_hash = 0;
    AlgebraicNumber constant;
    std::vector<AlgVector> seeds;
    std::vector<AlgVector> X;
    std::vector<std::string> state_names;  // audit aid, not load-bearing
};

struct SaturationResult {
    bool found = false;
    Certificate cert;          // valid when found
    std::vector<AlgVector> X;  // working set, also on failure
    int rounds = 0;
    size_t lp_calls = 0;
    std::string failure;       // reason when !found
};

// Grows X = {v} ∪ seeds until (1/alpha) M x stays in conv_<=(X) for every
// operator M and x in X; images found outside are added once per round and
// the set re-minimized with hull_le.
SaturationResult saturate_pathwidth(const OperatorSystem &sys, const AlgebraicNumber &alpha,
                                    const std::vector<AlgVector> &seeds, const Limits &lim = {});

// Tree variant: X = {v/alpha} ∪ seeds, closure under Phi(x, x') (and Delta
// for forests) without further alpha scaling.
SaturationResult saturate_tree(const TreeSystem &sys, const AlgebraicNumber &alpha,
                               const std::vector<AlgVector> &seeds, const Limits &lim = {});

struct Verification {
    bool verified = false;
    std::string reason;  // set when refuted
};

// Regenerates the operator system from the problem descriptor, checks the
// fingerprint, then re-checks the v-membership and every closure obligation
// from scratch.
Verification verify_certificate(const Certificate &cert, const Limits &lim = {});

// Numeric (non-certified value) lower bound on the joint spectral radius:
// for each product P of at most `depth` operators, a nonnegative rational
// vector x gives the exact Collatz-Wielandt bound min_{i: x_i>0} (Px)_i/x_i
// <= rho(P); the reported `bound` and `length` are exact, `value` is the
// double of bound^(1/length).
struct LowerBound {
    double value = 0;
    Rational bound = 0;
    int length = 0;
    std::vector<int> word;  // operator indices, applied right to left
};

LowerBound lower_bound(const OperatorSystem &sys, int depth);

// The reduced systems certificates are stated against.
OperatorSystem canonical_pw_system(const Problem &pr, int k);
TreeSystem canonical_tree_system(const Problem &pr, bool with_union);

}  // namespace domcert
