#pragma once

#include "slcs/text.hpp"
#include "slcs/weighted.hpp"

#include <vector>

namespace slcs {

// Seaweed matrix of a against the bi-infinite string u u u ..., kept as its column-period submatrix.
// Seaweeds start at top positions s (integers, b position s..s+1) and end at bottom column c;
// the nonzero (s,c) repeats as (s+kp, c+kp).
struct PeriodicSeaweed {
    int m = 0, p = 0;
    std::vector<long long> start;  // start[c] for columns c in [0,p)
    std::vector<int> column;       // column[r]: the c in [0,p) whose start is r mod p

    long long start_of(long long c) const;
    long long end_of(long long s) const;
    // Nonzeros with start >= i and end column < j, over all periods.
    long long count(long long i, long long j) const;
    // LCS of a against b[i:j]; j - i when j < i.
    long long h(long long i, long long j) const;
};

// Every character of a must match some character of u.
PeriodicSeaweed periodic_build(const Text& a, const Text& u);

// LCS of a against u^k.
int tandem_lcs(const Text& a, const Text& u, int k);
int tandem_lcs(const PeriodicSeaweed& ps, int k);

struct TandemResult {
    int k = 0, offset = 0;
    Rational score;
    bool operator==(const TandemResult&) const = default;
};

// Best window of length kp, k in [1,m], at offset in [0,p) of the periodic string;
// ties go to the smaller k, then the smaller offset.
TandemResult tandem_cyclic(const Text& a, const Text& u, const Weights& w);

}  // namespace slcs
