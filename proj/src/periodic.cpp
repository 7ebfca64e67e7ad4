#include "slcs/periodic.hpp"
#include "slcs/index.hpp"

#include <algorithm>
#include <cstdlib>

namespace slcs {

namespace {

long long fdiv(long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
long long cdiv(long long a, long long b) { return -fdiv(-a, b); }
long long fmod(long long a, long long b) { return a - b * fdiv(a, b); }

}  // namespace

long long PeriodicSeaweed::start_of(long long c) const { return start[fmod(c, p)] + p * fdiv(c, p); }

long long PeriodicSeaweed::end_of(long long s) const {
    int c0 = column[fmod(s, p)];
    return c0 + (s - start[c0]);
}

long long PeriodicSeaweed::count(long long i, long long j) const {
    long long total = 0;
    for (int c = 0; c < p; ++c) {
        long long k = fdiv(j - 1 - c, p) - cdiv(i - start[c], p) + 1;
        if (k > 0) total += k;
    }
    return total;
}

long long PeriodicSeaweed::h(long long i, long long j) const {
    if (j < i) return j - i;
    return j - i - count(i, j);
}

PeriodicSeaweed periodic_build(const Text& a, const Text& u) {
    const int m = static_cast<int>(a.size()), p = static_cast<int>(u.size());
    if (p == 0) throw Error("periodic: empty period string");
    PeriodicSeaweed ps{m, p, std::vector<long long>(static_cast<std::size_t>(p)), {}};
    auto& r = ps.start;
    for (int c = 0; c < p; ++c) r[c] = c - m;
    auto get = [&](long long c) { return r[fmod(c, p)] + p * fdiv(c, p); };
    auto set = [&](long long c, long long v) { r[fmod(c, p)] = v - p * fdiv(c, p); };
    for (int l = 0; l < m; ++l) {
        int i0 = 0;
        while (i0 < p && !matches(a[l], u[i0])) ++i0;
        if (i0 == p) throw Error("periodic: a character of a does not occur in u");
        // the first cell is a match and leaves the braid unchanged
        for (int k = 1; k < p; ++k) {
            long long i = i0 + k;
            if (matches(a[l], u[i % p])) continue;
            long long c1 = i + m - l, c0 = c1 - 1;
            long long lo = get(c0), hi = get(c1);
            if (lo < hi) {
                set(c0, hi);
                set(c1, lo);
            }
        }
    }
    const long long bound = static_cast<long long>(m) * p + p + m;
    ps.column.assign(static_cast<std::size_t>(p), -1);
    for (int c = 0; c < p; ++c) {
        if (std::llabs(r[c]) > bound) throw Error("periodic: start index out of bounds");
        int res = static_cast<int>(fmod(r[c], p));
        if (ps.column[res] != -1) throw Error("periodic: malformed period submatrix");
        ps.column[res] = c;
    }
    return ps;
}

int tandem_lcs(const PeriodicSeaweed& ps, int k) {
    if (k < 0) throw Error("tandem: negative repeat count");
    // longer texts already contain every character of a in its own copy of u
    long long kk = std::min(k, ps.m), n = kk * ps.p;
    return static_cast<int>(ps.h(0, n));
}

int tandem_lcs(const Text& a, const Text& u, int k) { return tandem_lcs(periodic_build(a, u), k); }

TandemResult tandem_cyclic(const Text& a, const Text& u, const Weights& w) {
    const int m = static_cast<int>(a.size()), p = static_cast<int>(u.size());
    if (m == 0 || p == 0) throw Error("tandem: empty string");
    auto norm = normalize(w);
    const long long nu = norm.nu;
    auto ps = periodic_build(blow_up(a, norm.mu, nu), blow_up(u, norm.mu, nu));
    TandemResult best;
    bool have = false;
    for (int k = 1; k <= m; ++k) {
        const long long len = nu * k * p;
        // diagonal walk (t, t+len) with unit steps
        long long cnt = ps.count(0, len);
        for (long long t = 0;; ++t) {
            if (t % nu == 0) {
                Rational score = Rational(len - cnt, nu) * norm.scale + w.gap * (m + static_cast<long long>(k) * p);
                if (!have || score > best.score) {
                    best = {k, static_cast<int>(t / nu), score};
                    have = true;
                }
            }
            if (t == nu * (p - 1)) break;
            cnt += -(ps.end_of(t) < len + t ? 1 : 0) + (ps.start_of(len + t) >= t + 1 ? 1 : 0);
        }
    }
    return best;
}

}  // namespace slcs
