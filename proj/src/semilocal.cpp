#include "slcs/semilocal.hpp"
#include "slcs/minplus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

namespace slcs {

SeaweedMatrix seaweed_build(const Text& a, const Text& b) {
    const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
    std::vector<int> row_at(static_cast<std::size_t>(m + n));
    for (int c = 0; c < m + n; ++c) row_at[c] = c;
    for (int l = 0; l < m; ++l) {
        const Symbol x = a[l];
        int* front = row_at.data() + (m - l - 1);
        for (int i = 0; i < n; ++i) {
            int& lo = front[i];
            int& hi = front[i + 1];
            if (lo < hi && !matches(x, b[i])) std::swap(lo, hi);
        }
    }
    PermutationMatrix p(m + n);
    for (int c = 0; c < m + n; ++c) p.set(row_at[c], c);
    return SeaweedMatrix{m, n, std::move(p)};
}

int seaweed_h(const SeaweedMatrix& sw, const DominanceCounter& c, int i, int j) {
    if (i < -sw.m || i > sw.n || j < 0 || j > sw.m + sw.n) throw Error("score index out of range");
    if (j < i) return j - i;
    return j - i - c.query(i + sw.m, j);
}

ScoreOracle::ScoreOracle(Text a, Text b) : ScoreOracle(a, b, seaweed_build(a, b)) {}

ScoreOracle::ScoreOracle(Text a, Text b, SeaweedMatrix sw)
    : a_(std::move(a)), b_(std::move(b)), sw_(std::move(sw)), lazy_(std::make_shared<Lazy>()) {
    if (sw_.m != static_cast<int>(a_.size()) || sw_.n != static_cast<int>(b_.size()))
        throw Error("seaweed matrix does not match the strings");
}

const DominanceCounter& ScoreOracle::counter() const {
    std::call_once(lazy_->once, [this] { lazy_->counter = DominanceCounter(sw_.perm); });
    return lazy_->counter;
}

int ScoreOracle::h(int i, int j) const { return seaweed_h(sw_, counter(), i, j); }

int ScoreOracle::score(ScoreKind kind, int i, int j) const {
    const int m = sw_.m, n = sw_.n;
    switch (kind) {
    case ScoreKind::string_substring:
        if (i < 0 || j > n || i > j) throw Error("string-substring index out of range");
        return h(i, j);
    case ScoreKind::prefix_suffix:
        if (i < 0 || i > m || j < 0 || j > n) throw Error("prefix-suffix index out of range");
        return h(j, m + n - i) - m + i;
    case ScoreKind::suffix_prefix:
        if (i < 0 || i > m || j < 0 || j > n) throw Error("suffix-prefix index out of range");
        return h(-i, j) - i;
    case ScoreKind::substring_string:
        if (i < 0 || j > m || i > j) throw Error("substring-string index out of range");
        return h(-i, m + n - j) - m - i + j;
    }
    return 0;
}

Text ScoreOracle::traceback(int i, int j) const {
    if (i < 0 || j > sw_.n || i > j) throw Error("traceback window out of range");
    const int m = sw_.m, w = j - i;
    std::vector<std::vector<int>> dp(static_cast<std::size_t>(m + 1), std::vector<int>(static_cast<std::size_t>(w + 1), 0));
    for (int l = 1; l <= m; ++l)
        for (int k = 1; k <= w; ++k)
            dp[l][k] = matches(a_[l - 1], b_[i + k - 1]) ? dp[l - 1][k - 1] + 1 : std::max(dp[l - 1][k], dp[l][k - 1]);
    Text out;
    int l = m, k = w;
    while (l > 0 && k > 0) {
        if (matches(a_[l - 1], b_[i + k - 1]) && dp[l][k] == dp[l - 1][k - 1] + 1) {
            out.push_back(a_[l - 1] == WILDCARD ? b_[i + k - 1] : a_[l - 1]);
            --l;
            --k;
        } else if (dp[l][k] == dp[l - 1][k]) {
            --l;
        } else {
            --k;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

SeaweedMatrix swap(const SeaweedMatrix& sw) { return SeaweedMatrix{sw.n, sw.m, rotate_half(sw.perm)}; }

namespace {

void check_pair(const SeaweedMatrix& left, const SeaweedMatrix& right) {
    if (left.n != right.n) throw Error("composition: mismatched b length");
    if (left.perm.size() != left.m + left.n || right.perm.size() != right.m + right.n)
        throw Error("composition: malformed seaweed matrix");
}

std::vector<int> padded_left(const SeaweedMatrix& left, int m2) {
    const int size = left.m + m2 + left.n;
    std::vector<int> a(static_cast<std::size_t>(size));
    for (int r = 0; r < m2; ++r) a[r] = r;
    for (int r = 0; r < left.m + left.n; ++r) a[r + m2] = left.perm.col(r) + m2;
    return a;
}

}  // namespace

SeaweedMatrix compose_horizontal_direct(const SeaweedMatrix& left, const SeaweedMatrix& right) {
    check_pair(left, right);
    const int m1 = left.m, m2 = right.m, n = left.n, size = m1 + m2 + n;
    std::vector<int> b(static_cast<std::size_t>(size));
    for (int r = 0; r < m2 + n; ++r) b[r] = right.perm.col(r);
    for (int r = m2 + n; r < size; ++r) b[r] = r;
    auto p = implicit_matmul(PermutationMatrix::from_rows(padded_left(left, m2)), PermutationMatrix::from_rows(b));
    return SeaweedMatrix{m1 + m2, n, std::move(p)};
}

SeaweedMatrix compose_horizontal(const SeaweedMatrix& left, const SeaweedMatrix& right) {
    check_pair(left, right);
    const int m1 = left.m, m2 = right.m, n = left.n;
    if (m2 == 0 || n < 2 * m2) return compose_horizontal_direct(left, right);

    // Cut the braid of P_{a'',b} into staggered square blocks along b and
    // multiply them in one at a time; seaweeds crossing a block boundary keep
    // their start order until they must cross.
    std::vector<int> x = padded_left(left, m2);
    const int size = m1 + m2 + n;
    std::vector<int> x_inv(static_cast<std::size_t>(size));
    for (int r = 0; r < size; ++r) x_inv[x[r]] = r;

    std::vector<int> slots(static_cast<std::size_t>(m2)), next;
    for (int k = 0; k < m2; ++k) slots[k] = k;
    std::vector<int> q_rows, rows, local;
    std::vector<std::pair<int, int>> order;
    for (int x0 = 0; x0 < n; x0 += m2) {
        const int w = std::min(m2, n - x0), len = m2 + w;
        const bool last = x0 + w == n;
        next.clear();
        q_rows.assign(static_cast<std::size_t>(len), 0);
        auto route = [&](int seaweed, int input) {
            int c = right.perm.col(seaweed);
            if (c < x0 + w) {
                q_rows[input] = c - x0;
            } else {
                q_rows[input] = last ? w + (c - n) : w + static_cast<int>(next.size());
                next.push_back(seaweed);
            }
        };
        for (int k = 0; k < m2; ++k) route(slots[k], k);
        for (int k = 0; k < w; ++k) route(m2 + x0 + k, m2 + k);
        if (static_cast<int>(next.size()) != m2) throw Error("composition: malformed seaweed matrix");
        slots.swap(next);

        // X <- X (Id + Q + Id) on the window [x0, x0+len)
        order.clear();
        for (int k = 0; k < len; ++k) order.emplace_back(x_inv[x0 + k], k);
        std::sort(order.begin(), order.end());
        local.assign(static_cast<std::size_t>(len), 0);
        for (int q = 0; q < len; ++q) local[q] = order[q].second;
        auto prod = implicit_matmul(PermutationMatrix::from_rows(local), PermutationMatrix::from_rows(q_rows));
        for (int q = 0; q < len; ++q) {
            int r = order[q].first, c = x0 + prod.col(q);
            x[r] = c;
            x_inv[c] = r;
        }
    }
    return SeaweedMatrix{m1 + m2, n, PermutationMatrix::from_rows(x)};
}

SeaweedMatrix compose_vertical(const SeaweedMatrix& top, const SeaweedMatrix& bottom) {
    if (top.m != bottom.m) throw Error("composition: mismatched a length");
    return swap(compose_horizontal(swap(top), swap(bottom)));
}

namespace {

PermutationMatrix block_of(const PermutationMatrix& p, int m, int n, Block which) {
    switch (which) {
    case Block::df: return window(p, m, m + n, 0, n);
    case Block::fd: return window(p, m, m + n, n, m + n);
    case Block::uf: return window(p, 0, m, 0, n);
    case Block::fu: return window(p, 0, m, n, m + n);
    }
    return {};
}

}  // namespace

PermutationMatrix block(const SeaweedMatrix& sw, Block which) { return block_of(sw.perm, sw.m, sw.n, which); }

PermutationMatrix ThreeWay::block(Block which) const { return block_of(perm, m, n, which); }

ThreeWay three_way(const SeaweedMatrix& sw) {
    PermutationMatrix p = sw.perm;
    for (int r = 0; r < sw.m; ++r)
        if (p.col(r) != ABSENT && p.col(r) >= sw.n) p.clear_row(r);
    return ThreeWay{sw.m, sw.n, std::move(p)};
}

std::pair<ThreeWay, CrossMatrix> compose_three_way(const ThreeWay& left, const ThreeWay& right) {
    if (left.n != right.n) throw Error("composition: mismatched b length");
    const int m1 = left.m, m2 = right.m, n = left.n, m = m1 + m2;
    // (UF' | DF') (DF'' | FD'')
    auto lhs = window(left.perm, 0, m1 + n, 0, n);
    auto rhs = window(right.perm, m2, m2 + n, 0, m2 + n);
    CrossMatrix cross{m1, m2, n, subperm_matmul(lhs, rhs)};

    PermutationMatrix p(m + n);
    for (auto [r, c] : cross.x.pairs()) {
        if (r >= m1 || c < n) p.set(r + m2, c);
    }
    for (int r = m1; r < m1 + n; ++r) {
        int c = left.perm.col(r);
        if (c != ABSENT && c >= n) p.set(r + m2, c + m2);
    }
    for (int r = 0; r < m2; ++r) {
        int c = right.perm.col(r);
        if (c != ABSENT && c < n) p.set(r, c);
    }
    return {ThreeWay{m, n, std::move(p)}, std::move(cross)};
}

void write_seaweed(std::ostream& os, const SeaweedMatrix& sw) {
    os << sw.m << ' ' << sw.n << '\n';
    write_tsv(os, sw.perm);
}

SeaweedMatrix read_seaweed(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw Error("seaweed file: missing header");
    int m = -1, n = -1;
    if (std::sscanf(header.c_str(), "%d %d", &m, &n) != 2 || m < 0 || n < 0) throw Error("seaweed file: bad header");
    SeaweedMatrix sw{m, n, read_tsv(is, m + n)};
    if (!sw.perm.is_full()) throw Error("seaweed file: not a full permutation");
    return sw;
}

}  // namespace slcs
