#pragma once

#include "slcs/semilocal.hpp"
#include "slcs/text.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace slcs {

// Ranks of the characters of a string with distinct characters; throws otherwise.
std::vector<int> ranks(const Text& a);
bool is_permutation_string(const Text& a);

int lis(const Text& a);
// Positions of one longest increasing subsequence.
std::vector<int> lis_positions(const Text& a);

// Same result as seaweed_build(a, b) for permutations of a common alphabet.
SeaweedMatrix semilocal_perm(const Text& a, const Text& b);
// Strings whose characters are distinct within each string; either may contain
// characters absent from the other.
SeaweedMatrix semilocal_distinct(const Text& a, const Text& b);

int cyclic_lcs_perm(const Text& a, const Text& b);

int longest_c3_avoiding(const Text& t);
int longest_c4_avoiding(const Text& t);

enum class Monotone { increasing, modal };
int longest_k_monotone(const Text& a, int k, Monotone mode);

// Interval model of a circle graph: endpoint x is paired with partner[x].
class IntervalModel {
public:
    IntervalModel() = default;
    static IntervalModel from_intervals(const std::vector<std::pair<int, int>>& intervals);
    static IntervalModel read(std::istream& is);

    int n() const { return static_cast<int>(partner_.size()) / 2; }
    const std::vector<int>& partner() const { return partner_; }
    // Sorted by left endpoint.
    std::vector<std::pair<int, int>> intervals() const;

private:
    std::vector<int> partner_;
};

int thickness(const IntervalModel& model);

struct Clique {
    int size = 0;
    std::vector<std::pair<int, int>> intervals;  // sorted by left endpoint
};

Clique max_clique_circle(const IntervalModel& model);
Clique max_clique_circle_thick(const IntervalModel& model, int d);

}  // namespace slcs
