#include "slcs/permutation.hpp"
#include "slcs/minplus.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace slcs {

std::vector<int> ranks(const Text& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x] < a[y]; });
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        if (a[order[k]] == WILDCARD) throw Error("permutation string: wildcard not allowed");
        if (k > 0 && a[order[k]] == a[order[k - 1]]) throw Error("permutation string: repeated character");
        r[order[k]] = k;
    }
    return r;
}

bool is_permutation_string(const Text& a) {
    try {
        ranks(a);
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::vector<int> lis_positions(const Text& a) {
    std::vector<int> tails, prev(a.size(), -1);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        auto it = std::lower_bound(tails.begin(), tails.end(), a[i], [&](int p, Symbol v) { return a[p] < v; });
        if (it != tails.begin()) prev[i] = *(it - 1);
        if (it == tails.end()) tails.push_back(i);
        else *it = i;
    }
    std::vector<int> out;
    for (int p = tails.empty() ? -1 : tails.back(); p >= 0; p = prev[p]) out.push_back(p);
    std::reverse(out.begin(), out.end());
    return out;
}

int lis(const Text& a) { return static_cast<int>(lis_positions(a).size()); }

namespace {

// Places the seaweed matrix of the matched subproblem into P_{a,b}; every
// unmatched character keeps its seaweed straight.
SeaweedMatrix embed(const SeaweedMatrix& sub, int m, int n, const std::vector<int>& pa, const std::vector<int>& pb) {
    const int ms = sub.m, ns = sub.n;
    std::vector<char> used_a(static_cast<std::size_t>(m), 0), used_b(static_cast<std::size_t>(n), 0);
    for (int p : pa) used_a[p] = 1;
    for (int p : pb) used_b[p] = 1;
    auto full_row = [&](int r) { return r < ms ? m - 1 - pa[ms - 1 - r] : m + pb[r - ms]; };
    auto full_col = [&](int c) { return c < ns ? pb[c] : m + n - 1 - pa[ms + ns - 1 - c]; };
    SeaweedMatrix out{m, n, PermutationMatrix(m + n)};
    for (int r = 0; r < ms + ns; ++r) out.perm.set(full_row(r), full_col(sub.perm.col(r)));
    for (int l = 0; l < m; ++l)
        if (!used_a[l]) out.perm.set(m - 1 - l, m + n - 1 - l);
    for (int j = 0; j < n; ++j)
        if (!used_b[j]) out.perm.set(m + j, j);
    return out;
}

// a and b are permutations of [0,k).
SeaweedMatrix core(const std::vector<int>& a, const std::vector<int>& b) {
    const int k = static_cast<int>(a.size());
    if (k <= 1) return seaweed_build(Text(a.begin(), a.end()), Text(b.begin(), b.end()));
    const int h = (k + 1) / 2;
    std::vector<int> mark(static_cast<std::size_t>(k)), rank(static_cast<std::size_t>(k));
    auto half = [&](int lo, int hi) {
        std::fill(mark.begin(), mark.end(), 0);
        for (int i = lo; i < hi; ++i) mark[a[i]] = 1;
        for (int c = 0, next = 0; c < k; ++c)
            if (mark[c]) rank[c] = next++;
        std::vector<int> as, bs, pa, pb;
        for (int i = lo; i < hi; ++i) {
            as.push_back(rank[a[i]]);
            pa.push_back(i - lo);
        }
        for (int j = 0; j < k; ++j)
            if (mark[b[j]]) {
                bs.push_back(rank[b[j]]);
                pb.push_back(j);
            }
        return embed(core(as, bs), hi - lo, k, pa, pb);
    };
    SeaweedMatrix left = half(0, h);
    SeaweedMatrix right = half(h, k);
    return compose_horizontal(left, right);
}

}  // namespace

SeaweedMatrix semilocal_distinct(const Text& a, const Text& b) {
    ranks(a);
    ranks(b);
    const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
    std::vector<std::pair<Symbol, int>> sa, sb;
    for (int i = 0; i < m; ++i) sa.emplace_back(a[i], i);
    for (int j = 0; j < n; ++j) sb.emplace_back(b[j], j);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    // common characters in alphabet order, with their positions in a and b
    std::vector<int> rank_at_a(static_cast<std::size_t>(m), -1), rank_at_b(static_cast<std::size_t>(n), -1);
    int common = 0;
    for (std::size_t x = 0, y = 0; x < sa.size() && y < sb.size();) {
        if (sa[x].first < sb[y].first) ++x;
        else if (sb[y].first < sa[x].first) ++y;
        else {
            rank_at_a[sa[x].second] = common;
            rank_at_b[sb[y].second] = common;
            ++common, ++x, ++y;
        }
    }
    std::vector<int> as, bs, pa, pb;
    for (int i = 0; i < m; ++i)
        if (rank_at_a[i] >= 0) {
            as.push_back(rank_at_a[i]);
            pa.push_back(i);
        }
    for (int j = 0; j < n; ++j)
        if (rank_at_b[j] >= 0) {
            bs.push_back(rank_at_b[j]);
            pb.push_back(j);
        }
    if (common == m && common == n) return core(as, bs);
    return embed(core(as, bs), m, n, pa, pb);
}

SeaweedMatrix semilocal_perm(const Text& a, const Text& b) {
    Text sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) throw Error("permutation strings over different alphabets");
    return semilocal_distinct(a, b);
}

namespace {

Text identity_text(int n) {
    Text id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return id;
}

Text reversed_identity(int n) {
    Text id = identity_text(n);
    std::reverse(id.begin(), id.end());
    return id;
}

Text ranked(const Text& a) {
    auto r = ranks(a);
    return Text(r.begin(), r.end());
}

}  // namespace

int cyclic_lcs_perm(const Text& a, const Text& b) {
    auto p = semilocal_perm(a, b);
    const int n = static_cast<int>(a.size());
    if (n == 0) return 0;
    Text aa = a;
    aa.insert(aa.end(), a.begin(), a.end());
    ScoreOracle o(std::move(aa), b, compose_horizontal(p, p));
    int best = 0;
    for (int s = 0; s < n; ++s) best = std::max(best, o.score(ScoreKind::substring_string, s, s + n));
    return best;
}

int longest_c3_avoiding(const Text& t) {
    Text r = ranked(t);
    return cyclic_lcs_perm(r, identity_text(static_cast<int>(r.size())));
}

// Avoiders of {132, 213, 312} read backwards are an increasing run followed by a
// decreasing run of larger characters.
int longest_c4_avoiding(const Text& t) {
    Text r = ranked(t);
    std::reverse(r.begin(), r.end());
    const int n = static_cast<int>(r.size());
    if (n == 0) return 0;
    // longest increasing subsequence ending at each position
    std::vector<int> ending(static_cast<std::size_t>(n));
    std::vector<Symbol> tails;
    for (int i = 0; i < n; ++i) {
        auto it = std::lower_bound(tails.begin(), tails.end(), r[i]);
        ending[i] = static_cast<int>(it - tails.begin()) + 1;
        if (it == tails.end()) tails.push_back(r[i]);
        else *it = r[i];
    }
    Text rev = reversed_identity(n);
    ScoreOracle o(r, rev, semilocal_perm(r, rev));
    int best = o.score(ScoreKind::string_substring, 0, n);
    for (int i = 0; i < n; ++i)
        best = std::max(best, ending[i] + o.score(ScoreKind::suffix_prefix, i + 1, n - 1 - r[i]));
    return best;
}

int longest_k_monotone(const Text& a, int k, Monotone mode) {
    if (k < 0) throw Error("k must be nonnegative");
    if (mode == Monotone::modal && k % 2 != 0) throw Error("k must be even in modal mode");
    Text r = ranked(a);
    const int n = static_cast<int>(r.size());
    if (n == 0 || k == 0) return 0;
    SeaweedMatrix unit = semilocal_perm(identity_text(n), r);
    int e = std::min(k, n);
    if (mode == Monotone::modal) {
        unit = compose_horizontal(unit, semilocal_perm(reversed_identity(n), r));
        e = std::min(k / 2, (n + 1) / 2);
    }
    PermutationMatrix base = block(unit, Block::df);
    PermutationMatrix acc = PermutationMatrix::identity(n);
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = subperm_matmul(acc, base);
        if (e > 1) base = subperm_matmul(base, base);
    }
    return n - acc.nonzeros();
}

IntervalModel IntervalModel::from_intervals(const std::vector<std::pair<int, int>>& intervals) {
    const int n2 = 2 * static_cast<int>(intervals.size());
    IntervalModel m;
    m.partner_.assign(static_cast<std::size_t>(n2), -1);
    for (auto [l, r] : intervals) {
        if (l < 0 || r >= n2 || l >= r) throw Error("interval model: bad interval");
        if (m.partner_[l] >= 0 || m.partner_[r] >= 0) throw Error("interval model: shared endpoint");
        m.partner_[l] = r;
        m.partner_[r] = l;
    }
    return m;
}

IntervalModel IntervalModel::read(std::istream& is) {
    std::vector<std::pair<int, int>> iv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
        std::istringstream ls(line);
        int l, r;
        std::string extra;
        if (!(ls >> l >> r) || (ls >> extra)) throw Error("interval model: bad line " + std::to_string(lineno));
        iv.emplace_back(l, r);
    }
    return from_intervals(iv);
}

std::vector<std::pair<int, int>> IntervalModel::intervals() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < static_cast<int>(partner_.size()); ++x)
        if (partner_[x] > x) out.emplace_back(x, partner_[x]);
    return out;
}

int thickness(const IntervalModel& model) {
    int cur = 0, best = 0;
    const auto& a = model.partner();
    for (int x = 0; x < static_cast<int>(a.size()); ++x) {
        if (a[x] > x) best = std::max(best, ++cur);
        else --cur;
    }
    return best;
}

namespace {

// Left endpoints before k whose intervals reach k, thinned to an increasing run.
Clique witness(const IntervalModel& model, int k) {
    const auto& a = model.partner();
    std::vector<int> pos;
    Text vals;
    for (int x = 0; x < k; ++x)
        if (a[x] >= k) {
            pos.push_back(x);
            vals.push_back(a[x]);
        }
    Clique c;
    for (int p : lis_positions(vals)) c.intervals.emplace_back(pos[p], a[pos[p]]);
    c.size = static_cast<int>(c.intervals.size());
    return c;
}

}  // namespace

Clique max_clique_circle(const IntervalModel& model) {
    const int n2 = 2 * model.n();
    if (n2 == 0) return {};
    Text a(model.partner().begin(), model.partner().end()), id = identity_text(n2);
    ScoreOracle o(a, id, semilocal_perm(a, id));
    int best = -1, at = 1;
    for (int k = 1; k < n2; ++k) {
        int v = o.score(ScoreKind::prefix_suffix, k, k);
        if (v >= best) best = v, at = k;
    }
    return witness(model, at);
}

Clique max_clique_circle_thick(const IntervalModel& model, int d) {
    if (d < 1) throw Error("thickness parameter must be positive");
    const int n2 = 2 * model.n();
    if (n2 == 0) return {};
    const auto& a = model.partner();
    std::set<int> open;  // x < lo with a[x] >= lo
    int best = -1, at = 1;
    for (int lo = 0; lo < n2; lo += d) {
        const int hi = std::min(n2, lo + d);
        Text as(open.begin(), open.end());
        for (int x = lo; x < hi; ++x)
            if (a[x] >= lo) as.push_back(x);
        Text bs;
        for (int x : as) bs.push_back(a[x]);
        std::sort(bs.begin(), bs.end());
        Text av;
        for (int x : as) av.push_back(a[x]);
        ScoreOracle o(av, bs, semilocal_perm(av, bs));
        for (int k = std::max(1, lo); k < std::min(hi, n2); ++k) {
            int ks = static_cast<int>(std::lower_bound(as.begin(), as.end(), k) - as.begin());
            int js = static_cast<int>(std::lower_bound(bs.begin(), bs.end(), k) - bs.begin());
            int v = o.score(ScoreKind::prefix_suffix, ks, js);
            if (v >= best) best = v, at = k;
        }
        for (int x = lo; x < hi; ++x)
            if (a[x] < x) open.erase(a[x]);
        for (int x = lo; x < hi; ++x)
            if (a[x] >= hi) open.insert(x);
    }
    return witness(model, at);
}

}  // namespace slcs
