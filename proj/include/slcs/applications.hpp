#pragma once

#include "slcs/semilocal.hpp"

#include <vector>

namespace slcs {

enum class End { front, back };
enum class Side { a, b };

// P_{rev a, rev b} from P_{a,b}.
SeaweedMatrix reverse_both(const SeaweedMatrix& sw);

// Seaweed matrix kept current while characters or blocks are added at either end of either string.
class IncrementalLcs {
public:
    IncrementalLcs() = default;
    IncrementalLcs(Text a, Text b);

    const Text& a() const { return a_; }
    const Text& b() const { return b_; }
    const SeaweedMatrix& seaweed() const { return sw_; }
    int lcs() const;

    void update(End end, Side side, Symbol c);
    // block is P_{text,b} for side a, or P_{a,text} for side b.
    void block_update(End end, Side side, const Text& text, const SeaweedMatrix& block);

private:
    Text a_, b_;
    SeaweedMatrix sw_;
};

struct PatternWithCommon {
    Text text;
    std::vector<int> occurrences;  // start positions of the common substring, increasing
};

// LCS of t against every pattern; occurrences of c are handled by one vector-matrix product each.
std::vector<int> common_substring_lcs(const Text& t, const Text& c, const std::vector<PatternWithCommon>& patterns);

// Highest LCS of a against a cyclic shift of b.
int cyclic_lcs(const Text& a, const Text& b);

// Half-length of the longest square subsequence of a.
int longest_repeating_subsequence(const Text& a);

}  // namespace slcs
