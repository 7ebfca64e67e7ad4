#include "slcs/applications.hpp"
#include "slcs/minplus.hpp"

#include <algorithm>

namespace slcs {

SeaweedMatrix reverse_both(const SeaweedMatrix& sw) {
    const int size = sw.m + sw.n;
    PermutationMatrix p(size);
    for (auto [r, c] : sw.perm.pairs()) p.set(size - 1 - c, size - 1 - r);
    return SeaweedMatrix{sw.m, sw.n, std::move(p)};
}

namespace {

// One more row of cells below the dag: P_{ax,b} from P_{a,b}.
SeaweedMatrix append_row(const SeaweedMatrix& sw, Symbol x, const Text& b) {
    const int m = sw.m, n = sw.n, size = m + n + 1;
    std::vector<int> row_at(static_cast<std::size_t>(size));
    row_at[0] = 0;
    for (int c = 0; c < m + n; ++c) row_at[c + 1] = sw.perm.row(c) + 1;
    for (int i = 0; i < n; ++i)
        if (row_at[i] < row_at[i + 1] && !matches(x, b[i])) std::swap(row_at[i], row_at[i + 1]);
    PermutationMatrix p(size);
    for (int c = 0; c < size; ++c) p.set(row_at[c], c);
    return SeaweedMatrix{m + 1, n, std::move(p)};
}

Text reversed(const Text& t) { return Text(t.rbegin(), t.rend()); }

}  // namespace

IncrementalLcs::IncrementalLcs(Text a, Text b) : a_(std::move(a)), b_(std::move(b)), sw_(seaweed_build(a_, b_)) {}

int IncrementalLcs::lcs() const { return block(sw_, Block::uf).nonzeros(); }

void IncrementalLcs::update(End end, Side side, Symbol c) {
    const bool b_side = side == Side::b, front = end == End::front;
    SeaweedMatrix cur = b_side ? swap(sw_) : sw_;
    const Text& other = b_side ? a_ : b_;
    if (front) {
        cur = reverse_both(append_row(reverse_both(cur), c, reversed(other)));
    } else {
        cur = append_row(cur, c, other);
    }
    sw_ = b_side ? swap(cur) : std::move(cur);
    Text& target = b_side ? b_ : a_;
    if (front) target.insert(target.begin(), c);
    else target.push_back(c);
}

void IncrementalLcs::block_update(End end, Side side, const Text& text, const SeaweedMatrix& blk) {
    const int len = static_cast<int>(text.size());
    if (side == Side::a) {
        if (blk.m != len || blk.n != sw_.n) throw Error("block update: block does not match the fixed string");
        sw_ = end == End::back ? compose_horizontal(sw_, blk) : compose_horizontal(blk, sw_);
        if (end == End::back) a_.insert(a_.end(), text.begin(), text.end());
        else a_.insert(a_.begin(), text.begin(), text.end());
    } else {
        if (blk.n != len || blk.m != sw_.m) throw Error("block update: block does not match the fixed string");
        sw_ = end == End::back ? compose_vertical(sw_, blk) : compose_vertical(blk, sw_);
        if (end == End::back) b_.insert(b_.end(), text.begin(), text.end());
        else b_.insert(b_.begin(), text.begin(), text.end());
    }
}

std::vector<int> common_substring_lcs(const Text& t, const Text& c, const std::vector<PatternWithCommon>& patterns) {
    const int n = static_cast<int>(t.size()), l = static_cast<int>(c.size());
    const PermutationMatrix df = block(seaweed_build(c, t), Block::df);
    std::vector<int> out;
    std::vector<long long> h(static_cast<std::size_t>(n + 1)), next(h.size()), shifted(h.size());
    for (const auto& pat : patterns) {
        const int len = static_cast<int>(pat.text.size());
        int prev_end = 0;
        for (int s : pat.occurrences) {
            if (s < prev_end || s + l > len || !std::equal(c.begin(), c.end(), pat.text.begin() + s))
                throw Error("common substring: bad occurrence position");
            prev_end = s + std::max(l, 1);
        }
        std::fill(h.begin(), h.end(), 0);
        std::size_t occ = 0;
        for (int pos = 0; pos < len;) {
            if (occ < pat.occurrences.size() && pat.occurrences[occ] == pos && l > 0) {
                // h'(j) = j - min_i (i - h(i) + DF^Sigma(i,j))
                for (int i = 0; i <= n; ++i) shifted[i] = i - h[i];
                auto v = implicit_vecmat(shifted, df);
                for (int j = 0; j <= n; ++j) h[j] = j - v[j];
                pos += l;
                ++occ;
                continue;
            }
            if (occ < pat.occurrences.size() && pat.occurrences[occ] == pos) ++occ;
            Symbol x = pat.text[pos++];
            next[0] = 0;
            for (int j = 1; j <= n; ++j)
                next[j] = std::max({next[j - 1], h[j], h[j - 1] + (matches(x, t[j - 1]) ? 1 : 0)});
            std::swap(h, next);
        }
        out.push_back(static_cast<int>(h[n]));
    }
    return out;
}

int cyclic_lcs(const Text& a, const Text& b) {
    const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
    if (n == 0) return 0;
    Text bb = b;
    bb.insert(bb.end(), b.begin(), b.end());
    auto sw = seaweed_build(a, bb);
    DominanceCounter counter(sw.perm);
    // H(i, i+n) for i in [0,n]
    auto d = batch(sw.perm, counter, Line::diagonal, m, n, n);
    int best = 0;
    for (int v : d) best = std::max(best, n - v);
    return best;
}

int longest_repeating_subsequence(const Text& a) {
    const int n = static_cast<int>(a.size());
    if (n < 2) return 0;
    auto sw = seaweed_build(a, a);
    // prefix_suffix(k,k) = H(k, 2n-k) - n + k, stored row k + n
    StepCursor cur(sw.perm);
    int best = 0;
    for (int k = 1; k < n; ++k) {
        int h = (2 * n - k) - k - cur.at(k + n, 2 * n - k);
        best = std::max(best, h - n + k);
    }
    return best;
}

}  // namespace slcs
