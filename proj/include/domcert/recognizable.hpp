#pragma once

#include <string>
#include <vector>

#include "domcert/util.hpp"

namespace domcert {

// Ultimately periodic subset of N, canonical form: minimal period q >= 1,
// then minimal preperiod p >= 0.  table has p+q bits; membership of n is
// table[compress(n)].
struct RecognizableSet {
    int p = 0;
    int q = 1;
    std::vector<char> table;  // size p+q

    static RecognizableSet from_bits(int p, int q, std::vector<char> bits);  // canonicalizes
    static RecognizableSet parse(const std::string &text);

    bool contains(long n) const { return n >= 0 && table[compress(n)]; }
    int compress(long n) const { return n < p ? (int)n : (int)((n - p) % q) + p; }
    bool empty() const;
    bool is_all_naturals() const;
    std::string str() const;
    bool operator==(const RecognizableSet &o) const = default;
};

// Value class map tau(p,q,.) for a shared compression of two sets.
int tau(int p, int q, long n);

// Smallest (p,q) such that counting neighbors up to the class tau(p,q,.) is
// lossless for both sets: p = max(p_sigma, p_rho) + 1 and q the least
// divisor of lcm(q_sigma, q_rho) compatible with both tables.
void joint_period(const RecognizableSet &sigma, const RecognizableSet &rho, int &p, int &q);

}  // namespace domcert
