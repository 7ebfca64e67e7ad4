#pragma once

#include "slcs/rational.hpp"
#include "slcs/semilocal.hpp"

#include <string_view>
#include <vector>

namespace slcs {

struct Weights {
    Rational match{1}, mismatch{0}, gap{0};

    // mismatch < match and 2*gap <= mismatch
    void validate() const;
    bool operator==(const Weights&) const = default;
};

// "lcs", "indel", "levenshtein", "dna"
Weights preset(std::string_view name);

struct Normalized {
    Rational scale;     // w_match - 2 w_gap
    Rational mismatch;  // normalised mismatch weight mu/nu
    long long mu = 0, nu = 1;
};

Normalized normalize(const Weights& w);

// Every character c becomes $^mu c^(nu-mu).
Text blow_up(const Text& s, long long mu, long long nu);

// Semi-local weighted scores through the blown-up seaweed matrix.
class WeightedOracle {
public:
    WeightedOracle(Text a, Text b, Weights w);

    const Weights& weights() const { return w_; }
    const Normalized& normalized() const { return norm_; }
    const ScoreOracle& blown() const { return blown_; }
    int m() const { return m_; }
    int n() const { return n_; }

    // Normalised score, i.e. H of the blown-up strings divided by nu.
    Rational normalized_score(ScoreKind kind, int i, int j) const;
    Rational score(ScoreKind kind, int i, int j) const;
    // String-substring score with the j < i extension; anti-Monge over [0,n]^2.
    Rational extended(int i, int j) const;
    // String-substring scores of row i for ends j in [i,n].
    std::vector<Rational> row(int i) const;
    // String-substring scores of windows (i, i+len) for i in [0, n-len].
    std::vector<Rational> diagonal(int len) const;

private:
    Text a_, b_;
    Weights w_;
    Normalized norm_;
    int m_, n_;
    ScoreOracle blown_;

    Rational restore(Rational h_star, int total_length) const;
};

Rational alignment_score(const Text& a, const Text& b, const Weights& w);
// Nonnegative opposite of the alignment score; for edit-distance weights.
Rational edit_distance(const Text& a, const Text& b, const Weights& w);

struct Match {
    int start = 0, end = 0;
    Rational score;
    bool operator==(const Match&) const = default;
};

enum class Filter { all, minimal, fixed, unique_starts };

struct MatchReport {
    Filter filter = Filter::all;
    std::vector<Match> windows;
};

// For every start i in [0,n], the leftmost end j >= i of highest score.
std::vector<Match> complete_matching(const Text& p, const Text& t, const Weights& w);

// Windows of t scoring at least h against p.
// minimal: inclusion-minimal windows; fixed: windows of length window_length;
// unique_starts: the shortest window for each start.
MatchReport threshold_matching(const Text& p, const Text& t, const Weights& w, Rational h, Filter filter = Filter::all,
                               int window_length = 0);

enum class LocalMode { minimal, fixed };

// Windows of t containing p as a subsequence.
MatchReport local_subseq(const Text& p, const Text& t, LocalMode mode, int window_length = 0);
MatchReport local_subseq(const ScoreOracle& o, LocalMode mode, int window_length = 0);

}  // namespace slcs
