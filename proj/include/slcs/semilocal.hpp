#pragma once

#include "slcs/dominance.hpp"
#include "slcs/index.hpp"
#include "slcs/text.hpp"

#include <iosfwd>
#include <memory>
#include <mutex>
#include <utility>

namespace slcs {

// Seaweed matrix P_{a,b} over <-m:n | 0:m+n>.
// Row i-hat is stored as i-hat + m - 1/2, column j-hat as j-hat - 1/2.
// The left boundary of a-character l is row m-1-l; the right boundary is column m+n-1-l.
struct SeaweedMatrix {
    int m = 0, n = 0;
    PermutationMatrix perm;

    int size() const { return m + n; }
    bool operator==(const SeaweedMatrix&) const = default;
};

SeaweedMatrix seaweed_build(const Text& a, const Text& b);

// H(i,j) = j - i - P^Sigma(i,j), i in [-m,n], j in [0,m+n]; j - i when j < i.
int seaweed_h(const SeaweedMatrix& sw, const DominanceCounter& c, int i, int j);

enum class ScoreKind { string_substring, prefix_suffix, suffix_prefix, substring_string };

// string_substring(i,j):  lcs(a, b[i:j]),    0 <= i <= j <= n
// prefix_suffix(k,j):     lcs(a[0:k], b[j:n]), 0 <= k <= m, 0 <= j <= n
// suffix_prefix(l,j):     lcs(a[l:m], b[0:j]), 0 <= l <= m, 0 <= j <= n
// substring_string(l,r):  lcs(a[l:r], b),    0 <= l <= r <= m
class ScoreOracle {
public:
    ScoreOracle(Text a, Text b);
    ScoreOracle(Text a, Text b, SeaweedMatrix sw);

    const Text& a() const { return a_; }
    const Text& b() const { return b_; }
    const SeaweedMatrix& seaweed() const { return sw_; }
    const DominanceCounter& counter() const;

    int h(int i, int j) const;
    int score(ScoreKind kind, int i, int j) const;
    // One LCS of a and b[i:j].
    Text traceback(int i, int j) const;

private:
    Text a_, b_;
    SeaweedMatrix sw_;
    struct Lazy {
        std::once_flag once;
        DominanceCounter counter;
    };
    std::shared_ptr<Lazy> lazy_;
};

// P_{b,a} from P_{a,b}.
SeaweedMatrix swap(const SeaweedMatrix& sw);

// P_{a'a'',b} from P_{a',b} and P_{a'',b}.
SeaweedMatrix compose_horizontal(const SeaweedMatrix& left, const SeaweedMatrix& right);
// Same product without the staggered block decomposition.
SeaweedMatrix compose_horizontal_direct(const SeaweedMatrix& left, const SeaweedMatrix& right);
// P_{a,b'b''} from P_{a,b'} and P_{a,b''}.
SeaweedMatrix compose_vertical(const SeaweedMatrix& top, const SeaweedMatrix& bottom);

// Blocks of P_{a,b}: string-substring (top to bottom), prefix-suffix (top to right),
// suffix-prefix (left to bottom) and substring-string (left to right).
enum class Block { df, fd, uf, fu };
PermutationMatrix block(const SeaweedMatrix& sw, Block which);

// P_{a,b} without its substring-string nonzeros.
struct ThreeWay {
    int m = 0, n = 0;
    PermutationMatrix perm;

    PermutationMatrix block(Block which) const;
    bool operator==(const ThreeWay&) const = default;
};

ThreeWay three_way(const SeaweedMatrix& sw);

// P_{a,b}<-m':n | 0:m''+n> for a = a'a''. Row x is row x + m'' of P_{a,b}.
struct CrossMatrix {
    int m1 = 0, m2 = 0, n = 0;
    PermutationMatrix x;
};

std::pair<ThreeWay, CrossMatrix> compose_three_way(const ThreeWay& left, const ThreeWay& right);

void write_seaweed(std::ostream& os, const SeaweedMatrix& sw);
SeaweedMatrix read_seaweed(std::istream& is);

}  // namespace slcs
