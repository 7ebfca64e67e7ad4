#include "slcs/minplus.hpp"

#include <cassert>

namespace slcs {

std::vector<long long> implicit_matvec(const PermutationMatrix& p, const std::vector<long long>& b) {
    const int n = p.size();
    if (!p.square() || static_cast<int>(b.size()) != n + 1) throw Error("implicit_matvec: dimension mismatch");
    StepCursor cur(p);
    auto f = [&](int i, int j) { return static_cast<long long>(cur.at(i, j)) + b[j]; };
    auto arg = smawk_row_minima(n + 1, n + 1, f);
    std::vector<long long> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) c[i] = f(i, arg[i]);
    return c;
}

std::vector<long long> implicit_vecmat(const std::vector<long long>& b, const PermutationMatrix& p) {
    const int n = p.size();
    if (!p.square() || static_cast<int>(b.size()) != n + 1) throw Error("implicit_vecmat: dimension mismatch");
    StepCursor cur(p);
    auto f = [&](int j, int i) { return static_cast<long long>(cur.at(i, j)) + b[i]; };
    auto arg = smawk_row_minima(n + 1, n + 1, f);
    std::vector<long long> c(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) c[j] = f(j, arg[j]);
    return c;
}

ExplicitMatrix naive_distance_product(const ExplicitMatrix& a, const ExplicitMatrix& b) {
    if (a.cols() != b.rows()) throw Error("distance product: inner dimension mismatch");
    ExplicitMatrix c(a.rows(), b.cols(), POS_INF, a.row_lo(), b.col_lo());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Ext x = a.at(i, j);
            if (x >= POS_INF) continue;
            for (int k = 0; k < b.cols(); ++k) {
                Ext s = ext_add(x, b.at(j, k));
                if (s < c.at(i, k)) c.at(i, k) = s;
            }
        }
    return c;
}

ExplicitMatrix identity_minplus(int n) {
    ExplicitMatrix m(n, n, POS_INF);
    for (int i = 0; i < n; ++i) m.at(i, i) = 0;
    return m;
}

ExplicitMatrix zero_minplus(int rows, int cols) { return ExplicitMatrix(rows, cols, POS_INF); }

namespace {

std::vector<int> steady_ant(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    if (n <= 1) return std::vector<int>(static_cast<std::size_t>(n), 0);
    const int h = (n + 1) / 2;

    std::vector<int> lo_rows, hi_rows, a_lo, a_hi;
    lo_rows.reserve(h);
    a_lo.reserve(h);
    for (int r = 0; r < n; ++r) {
        if (a[r] < h) {
            lo_rows.push_back(r);
            a_lo.push_back(a[r]);
        } else {
            hi_rows.push_back(r);
            a_hi.push_back(a[r] - h);
        }
    }
    std::vector<int> b_inv(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) b_inv[b[r]] = r;
    std::vector<int> lo_cols, hi_cols, rank(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        if (b_inv[c] < h) {
            rank[c] = static_cast<int>(lo_cols.size());
            lo_cols.push_back(c);
        } else {
            rank[c] = static_cast<int>(hi_cols.size());
            hi_cols.push_back(c);
        }
    }
    std::vector<int> b_lo(static_cast<std::size_t>(h)), b_hi(static_cast<std::size_t>(n - h));
    for (int r = 0; r < h; ++r) b_lo[r] = rank[b[r]];
    for (int r = h; r < n; ++r) b_hi[r - h] = rank[b[r]];

    std::vector<int> c_lo = steady_ant(a_lo, b_lo);
    std::vector<int> c_hi = steady_ant(a_hi, b_hi);

    std::vector<int> lo_col(static_cast<std::size_t>(n), ABSENT), lo_row(static_cast<std::size_t>(n), ABSENT);
    std::vector<int> hi_col(static_cast<std::size_t>(n), ABSENT), hi_row(static_cast<std::size_t>(n), ABSENT);
    for (int x = 0; x < h; ++x) {
        int r = lo_rows[x], c = lo_cols[c_lo[x]];
        lo_col[r] = c;
        lo_row[c] = r;
    }
    for (int x = 0; x < n - h; ++x) {
        int r = hi_rows[x], c = hi_cols[c_hi[x]];
        hi_col[r] = c;
        hi_row[c] = r;
    }

    // g[i]: first column line k with delta(i,k) > 0, or n+1.
    // delta(i,k) = #{hi: row < i, col < k} - #{lo: row >= i, col >= k}, monotone in both arguments.
    std::vector<int> g(static_cast<std::size_t>(n + 1));
    {
        int k = n, d = 0;
        g[0] = n + 1;
        for (int i = 1; i <= n; ++i) {
            int r = i - 1;
            if (hi_col[r] != ABSENT && hi_col[r] < k) ++d;
            if (lo_col[r] != ABSENT && lo_col[r] >= k) ++d;
            if (d <= 0) {
                g[i] = n + 1;
                continue;
            }
            while (k > 0) {
                int c = k - 1;
                int dd = d - (hi_row[c] != ABSENT && hi_row[c] < i) - (lo_row[c] != ABSENT && lo_row[c] >= i);
                if (dd <= 0) break;
                d = dd;
                --k;
            }
            g[i] = k;
        }
    }

    // Cursor over (i,k) tracking both candidate sums.
    int ci = 0, ck = n;
    int clo = h, chi = n - h, beta = n - h, alpha = h;
    auto move_to_k = [&](int k) {
        while (ck < k) {
            int c = ck;
            if (lo_row[c] != ABSENT && lo_row[c] >= ci) ++clo;
            if (hi_row[c] != ABSENT) {
                ++beta;
                if (hi_row[c] >= ci) ++chi;
            }
            ++ck;
        }
        while (ck > k) {
            int c = ck - 1;
            if (lo_row[c] != ABSENT && lo_row[c] >= ci) --clo;
            if (hi_row[c] != ABSENT) {
                --beta;
                if (hi_row[c] >= ci) --chi;
            }
            --ck;
        }
    };
    auto next_i = [&]() {
        int r = ci;
        if (lo_col[r] != ABSENT) {
            --alpha;
            if (lo_col[r] < ck) --clo;
        }
        if (hi_col[r] != ABSENT && hi_col[r] < ck) --chi;
        ++ci;
    };
    auto sval = [&]() { return std::min(clo + beta, chi + alpha); };

    std::vector<int> out(static_cast<std::size_t>(n), ABSENT);
    for (int r = 0; r < n; ++r) {
        int c = lo_col[r];
        if (c != ABSENT && c + 1 < g[r + 1]) out[r] = c;
        c = hi_col[r];
        if (c != ABSENT && c >= g[r]) out[r] = c;
    }

    std::vector<int> prev_s, cur_s;
    int prev_lo = 0;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) next_i();
        int lo = std::max(0, (i < n ? g[i + 1] : g[i]) - 1);
        int hi = std::min(n, i > 0 ? g[i - 1] : g[0]);
        lo = std::min(lo, hi);
        cur_s.assign(static_cast<std::size_t>(hi - lo + 1), 0);
        for (int k = lo; k <= hi; ++k) {
            move_to_k(k);
            cur_s[k - lo] = sval();
        }
        if (i > 0) {
            int r = i - 1;
            int c0 = std::max(0, g[r + 1] - 1), c1 = std::min(n - 1, g[r] - 1);
            for (int c = c0; c <= c1; ++c) {
                int s_tl = prev_s[c - prev_lo], s_tr = prev_s[c + 1 - prev_lo];
                int s_bl = cur_s[c - lo], s_br = cur_s[c + 1 - lo];
                int d = s_bl - s_tl - s_br + s_tr;
                assert(d == 0 || d == 1);
                if (d == 1) out[r] = c;
            }
        }
        std::swap(prev_s, cur_s);
        prev_lo = lo;
    }
    return out;
}

std::vector<int> full_rows(const PermutationMatrix& p) {
    if (!p.is_full()) throw Error("implicit_matmul: not a full permutation");
    return p.rows();
}

}  // namespace

PermutationMatrix implicit_matmul(const PermutationMatrix& a, const PermutationMatrix& b) {
    if (a.size() != b.size()) throw Error("implicit_matmul: size mismatch");
    return PermutationMatrix::from_rows(steady_ant(full_rows(a), full_rows(b)));
}

PermutationMatrix subperm_matmul(const PermutationMatrix& a, const PermutationMatrix& b) {
    const int K = a.n_cols();
    if (b.n_rows() != K) throw Error("subperm_matmul: inner dimension mismatch");
    std::vector<int> rows_a, zero_a, cols_b, zero_b;
    for (int r = 0; r < a.n_rows(); ++r)
        if (a.col(r) != ABSENT) rows_a.push_back(r);
    for (int c = 0; c < K; ++c)
        if (a.row(c) == ABSENT) zero_a.push_back(c);
    for (int c = 0; c < b.n_cols(); ++c)
        if (b.row(c) != ABSENT) cols_b.push_back(c);
    for (int r = 0; r < K; ++r)
        if (b.col(r) == ABSENT) zero_b.push_back(r);
    const int ra = static_cast<int>(rows_a.size()), cb = static_cast<int>(cols_b.size());
    const int pad = K - ra;

    std::vector<int> ea(static_cast<std::size_t>(K)), eb(static_cast<std::size_t>(K));
    for (int t = 0; t < pad; ++t) ea[t] = zero_a[t];
    for (int x = 0; x < ra; ++x) ea[pad + x] = a.col(rows_a[x]);
    for (int y = 0; y < cb; ++y) eb[b.row(cols_b[y])] = y;
    for (int t = 0; t < K - cb; ++t) eb[zero_b[t]] = cb + t;

    std::vector<int> ec = steady_ant(ea, eb);
    PermutationMatrix c(a.n_rows(), b.n_cols());
    for (int x = 0; x < ra; ++x) {
        int y = ec[pad + x];
        if (y < cb) c.set(rows_a[x], cols_b[y]);
    }
    return c;
}

PermutationMatrix dense_matmul(const PermutationMatrix& a, const PermutationMatrix& b) {
    if (a.n_cols() != b.n_rows()) throw Error("dense_matmul: inner dimension mismatch");
    return to_permutation(density_matrix(naive_distance_product(distribution_matrix(a), distribution_matrix(b))));
}

bool bruhat_leq(const PermutationMatrix& a, const PermutationMatrix& b) {
    if (a.size() != b.size()) throw Error("bruhat: size mismatch");
    return implicit_matmul(rotate(a), b) == rotate(PermutationMatrix::identity(a.size()));
}

bool bruhat_leq_naive(const PermutationMatrix& a, const PermutationMatrix& b) {
    if (a.size() != b.size()) throw Error("bruhat: size mismatch");
    if (!a.is_full() || !b.is_full()) throw Error("bruhat: not a full permutation");
    ExplicitMatrix da = distribution_matrix(a), db = distribution_matrix(b);
    for (int i = 0; i < da.rows(); ++i)
        for (int j = 0; j < da.cols(); ++j)
            if (da.at(i, j) > db.at(i, j)) return false;
    return true;
}

}  // namespace slcs
