#pragma once

#include "slcs/rational.hpp"
#include "slcs/semilocal.hpp"
#include "slcs/text.hpp"
#include "slcs/weighted.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace slcs {

// Straight-line program. Statements are numbered from 0 here and from 1 in
// the text format:
//   k = 'c'      terminal
//   k = i j      concatenation of earlier statements
// Blank lines and lines starting with '#' are ignored. The last statement is t.
class Slp {
public:
    struct Statement {
        Symbol terminal = 0;
        int left = -1, right = -1;
        bool is_terminal() const { return left < 0; }
    };

    static Slp parse(std::string_view text);
    static Slp read(std::istream& is);
    std::string str() const;

    int add_terminal(Symbol c);
    int add_concat(int i, int j);

    int size() const { return static_cast<int>(stmts_.size()); }
    bool empty() const { return stmts_.empty(); }
    const Statement& at(int k) const { return stmts_[k]; }
    const mpz_class& length(int k) const { return len_[k]; }
    mpz_class length() const { return empty() ? mpz_class(0) : len_.back(); }

private:
    std::vector<Statement> stmts_;
    std::vector<mpz_class> len_;
};

Text slp_expand(const Slp& slp, std::size_t limit);

// Three sections: terminals; concatenations whose right part is a terminal;
// a chain t_k = t_{k-1} t_j with j from the first two sections.
bool is_lz78_form(const Slp& slp);
Slp lz78_slp(const Text& t);

// Length of the longest prefix of p that is a subsequence of t.
int global_subseq(const Slp& t, const Text& p);

// P_{t,p} without its substring-string nonzeros, restricted to the text
// characters that carry a nonzero. position[l] is the place in t of compact
// character l.
struct ThreeWayResult {
    mpz_class n;  // text length
    int m = 0;    // pattern length
    ThreeWay compact;
    std::vector<mpz_class> position;

    struct Nonzero {
        mpz_class row, col;
        bool operator==(const Nonzero&) const = default;
    };
    // Nonzeros of P_{t,p} in true coordinates (rows and columns in [0, n+m)).
    std::vector<Nonzero> nonzeros() const;
    PermutationMatrix remap(const std::vector<Nonzero>& nz) const;

    int lcs() const;
    int string_substring(int i, int j) const;                 // lcs(t, p[i:j])
    int prefix_suffix(const mpz_class& k, int j) const;      // lcs(t[0:k], p[j:m])
    int suffix_prefix(const mpz_class& l, int j) const;      // lcs(t[l:n], p[0:j])

private:
    int compact_before(const mpz_class& k) const;
    int count(int i, int j) const;
};

ThreeWayResult three_way_semilocal(const Slp& t, const Text& p);

struct SlpMatch {
    mpz_class start, end;
    Rational score;
    bool operator==(const SlpMatch&) const = default;
};

enum class SlpMode { minimal, fixed, bounded };

// Windows of t containing p as a subsequence: minimal ones, all of length w,
// or minimal ones of length at most w. Sorted by start.
std::vector<SlpMatch> local_subseq_slp(const Slp& t, const Text& p, SlpMode mode, const mpz_class& w = 0,
                                       std::size_t limit = std::size_t(1) << 22);
mpz_class local_subseq_slp_count(const Slp& t, const Text& p, SlpMode mode, const mpz_class& w = 0);

// All windows t[i:j], i <= j, whose alignment score against p is at least h.
std::vector<SlpMatch> threshold_matching_slp(const Slp& t, const Text& p, const Weights& w, Rational h,
                                             std::size_t limit = std::size_t(1) << 22);
mpz_class threshold_matching_slp_count(const Slp& t, const Text& p, const Weights& w, Rational h);

}  // namespace slcs
