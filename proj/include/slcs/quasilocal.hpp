#pragma once

#include "slcs/index.hpp"
#include "slcs/rational.hpp"
#include "slcs/text.hpp"
#include "slcs/weighted.hpp"

#include <utility>
#include <vector>

namespace slcs {

// String-substring seaweed matrices (n x n) of every canonical substring of a
// against b. Level l holds a[q 2^l : (q+1) 2^l] for every block inside a.
class CanonicalForest {
public:
    // Levels above max_len are not built; max_len < 0 builds all of them.
    CanonicalForest(Text a, Text b, int max_len = -1);

    int m() const { return static_cast<int>(a_.size()); }
    int n() const { return static_cast<int>(b_.size()); }
    int levels() const { return static_cast<int>(level_.size()); }
    int nodes(int level) const { return static_cast<int>(level_[level].size()); }
    const PermutationMatrix& node(int level, int q) const { return level_[level][q]; }
    // Canonical block a[i : i+s]; i must be a multiple of s.
    const PermutationMatrix& canonical(int i, int s) const;

    // Canonical blocks covering a[i:j], left to right, as (start, length).
    static std::vector<std::pair<int, int>> decompose(int i, int j);
    PermutationMatrix substring(int i, int j) const;

private:
    Text a_, b_;
    std::vector<std::vector<PermutationMatrix>> level_;
};

// String-substring matrix of every window a[i : i+w], i = 0..m-w.
std::vector<PermutationMatrix> window_substring(const Text& a, const Text& b, int w);

// grid[i][j] = lcs(a[i : i+w], b[j : j+w]).
std::vector<std::vector<int>> window_window(const Text& a, const Text& b, int w);

// String-substring matrix of every prescribed substring a[i:j], in input order.
std::vector<PermutationMatrix> quasi_local(const Text& a, const Text& b, const std::vector<std::pair<int, int>>& substrings);

struct Spliced {
    Rational score;
    std::vector<std::pair<int, int>> chain;  // exons in order of precedence
};

// Best alignment of b against a concatenation of non-overlapping exons of a
// taken left to right. The empty chain scores n * w_gap.
Spliced spliced_alignment(const Text& a, const Text& b, const std::vector<std::pair<int, int>>& exons,
                          const Weights& w);

}  // namespace slcs
