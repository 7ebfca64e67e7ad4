#include "slcs/quasilocal.hpp"
#include "slcs/dominance.hpp"
#include "slcs/minplus.hpp"
#include "slcs/semilocal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace slcs {

CanonicalForest::CanonicalForest(Text a, Text b, int max_len) : a_(std::move(a)), b_(std::move(b)) {
    const int m = this->m();
    if (m == 0) return;
    std::vector<PermutationMatrix> base;
    base.reserve(a_.size());
    for (Symbol c : a_) base.push_back(block(seaweed_build(Text{c}, b_), Block::df));
    level_.push_back(std::move(base));
    for (int s = 2; s <= m && (max_len < 0 || s <= max_len); s *= 2) {
        const auto& prev = level_.back();
        std::vector<PermutationMatrix> next;
        for (int q = 0; (q + 1) * s <= m; ++q) next.push_back(subperm_matmul(prev[2 * q], prev[2 * q + 1]));
        level_.push_back(std::move(next));
    }
}

const PermutationMatrix& CanonicalForest::canonical(int i, int s) const {
    if (s <= 0 || !std::has_single_bit(static_cast<unsigned>(s)) || i < 0 || i % s != 0)
        throw Error("canonical substring: bad block");
    const int l = std::countr_zero(static_cast<unsigned>(s));
    if (l >= levels() || i / s >= nodes(l)) throw Error("canonical substring: not in forest");
    return level_[l][i / s];
}

std::vector<std::pair<int, int>> CanonicalForest::decompose(int i, int j) {
    std::vector<std::pair<int, int>> out;
    while (i < j) {
        int s = std::bit_floor(static_cast<unsigned>(j - i));
        if (i > 0) s = std::min(s, i & -i);
        out.emplace_back(i, s);
        i += s;
    }
    return out;
}

PermutationMatrix CanonicalForest::substring(int i, int j) const {
    if (i < 0 || j > m() || i > j) throw Error("substring out of range");
    PermutationMatrix acc = PermutationMatrix::identity(n());
    bool first = true;
    for (auto [st, s] : decompose(i, j)) {
        acc = first ? canonical(st, s) : subperm_matmul(acc, canonical(st, s));
        first = false;
    }
    return acc;
}

namespace {

// Matrices of a[k s : k s + s t] for every k with the window inside a.
std::vector<PermutationMatrix> st_windows(const CanonicalForest& f, int s, int t) {
    if (t == 1) {
        const int l = std::countr_zero(static_cast<unsigned>(s));
        std::vector<PermutationMatrix> out;
        for (int q = 0; q < f.nodes(l); ++q) out.push_back(f.node(l, q));
        return out;
    }
    const int count = (f.m() - s * t) / s + 1;
    std::vector<PermutationMatrix> out;
    out.reserve(static_cast<std::size_t>(count));
    if (t % 2 == 0) {
        auto prev = st_windows(f, s, t - 1);
        for (int k = 0; k < count; ++k) out.push_back(subperm_matmul(prev[k], f.canonical(k * s + s * (t - 1), s)));
    } else {
        auto prev = st_windows(f, 2 * s, (t - 1) / 2);
        for (int k = 0; k < count; ++k) {
            const int i = k * s;
            if (k % 2 == 0) out.push_back(subperm_matmul(prev[k / 2], f.canonical(i + s * (t - 1), s)));
            else out.push_back(subperm_matmul(f.canonical(i, s), prev[(k + 1) / 2]));
        }
    }
    return out;
}

using Range = std::pair<int, int>;

std::map<Range, PermutationMatrix> prescribed(const CanonicalForest& f, int s, const std::set<Range>& todo) {
    std::map<Range, PermutationMatrix> out;
    if (todo.empty()) return out;
    std::vector<Range> rest;
    std::set<Range> next;
    for (auto [i, j] : todo) {
        if (j - i == s) {
            out.emplace(Range{i, j}, f.canonical(i, s));
            continue;
        }
        rest.emplace_back(i, j);
        const int ni = (i + 2 * s - 1) / (2 * s) * (2 * s), nj = j / (2 * s) * (2 * s);
        if (ni < nj) next.emplace(ni, nj);
    }
    auto r = prescribed(f, 2 * s, next);
    for (auto [i, j] : rest) {
        const bool i_odd = (i / s) % 2, j_odd = (j / s) % 2;
        PermutationMatrix p;
        if (!i_odd && !j_odd) p = r.at({i, j});
        else if (!i_odd) p = subperm_matmul(r.at({i, j - s}), f.canonical(j - s, s));
        else if (!j_odd) p = subperm_matmul(f.canonical(i, s), r.at({i + s, j}));
        else if (j - i == 2 * s) p = subperm_matmul(f.canonical(i, s), f.canonical(j - s, s));
        else p = subperm_matmul(subperm_matmul(f.canonical(i, s), r.at({i + s, j - s})), f.canonical(j - s, s));
        out.emplace(Range{i, j}, std::move(p));
    }
    return out;
}

}  // namespace

std::vector<PermutationMatrix> window_substring(const Text& a, const Text& b, int w) {
    const int m = static_cast<int>(a.size());
    if (w < 1 || w > m) throw Error("window length out of range");
    CanonicalForest f(a, b, w);
    return st_windows(f, 1, w);
}

std::vector<std::vector<int>> window_window(const Text& a, const Text& b, int w) {
    const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
    if (w < 0 || w > std::min(m, n)) throw Error("window length out of range");
    if (w == 0) return std::vector<std::vector<int>>(m + 1, std::vector<int>(n + 1, 0));
    std::vector<std::vector<int>> grid;
    for (const auto& p : window_substring(a, b, w)) {
        DominanceCounter c(p);
        auto d = batch(p, c, Line::diagonal, 0, w, n - w);
        std::vector<int> row(static_cast<std::size_t>(n - w + 1));
        for (int j = 0; j <= n - w; ++j) row[j] = w - d[j];
        grid.push_back(std::move(row));
    }
    return grid;
}

std::vector<PermutationMatrix> quasi_local(const Text& a, const Text& b, const std::vector<std::pair<int, int>>& substrings) {
    const int m = static_cast<int>(a.size());
    for (auto [i, j] : substrings)
        if (i < 0 || j > m || i >= j) throw Error("prescribed substring out of range or empty");
    if (substrings.empty()) return {};
    CanonicalForest f(a, b);
    auto done = prescribed(f, 1, std::set<Range>(substrings.begin(), substrings.end()));
    std::vector<PermutationMatrix> out;
    for (const auto& r : substrings) out.push_back(done.at(r));
    return out;
}

namespace {

// c(j) = min_i b(i) + q P^Sigma(i,j)
std::vector<long long> scaled_vecmat(const std::vector<long long>& b, const PermutationMatrix& p, long long q) {
    if (q == 1) return implicit_vecmat(b, p);
    const int n = p.size();
    StepCursor cur(p);
    auto f = [&](int j, int i) { return q * cur.at(i, j) + b[i]; };
    auto arg = smawk_row_minima(n + 1, n + 1, f);
    std::vector<long long> c(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) c[j] = f(j, arg[j]);
    return c;
}

// v'(s) = max_{s'} v(s') + q H(s', s)
std::vector<long long> extend(const std::vector<long long>& v, const PermutationMatrix& p, long long q) {
    const int n = static_cast<int>(v.size()) - 1;
    std::vector<long long> w(v.size());
    for (int s = 0; s <= n; ++s) w[s] = q * s - v[s];
    auto c = scaled_vecmat(w, p, q);
    for (int s = 0; s <= n; ++s) c[s] = q * s - c[s];
    return c;
}

}  // namespace

Spliced spliced_alignment(const Text& a, const Text& b, const std::vector<std::pair<int, int>>& exons, const Weights& w) {
    const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
    for (auto [i, j] : exons)
        if (i < 0 || j > m || i >= j) throw Error("exon out of range or empty");
    const Normalized norm = normalize(w);
    const int nu = static_cast<int>(norm.nu);
    // chain value in units of 1/q: q lcs(blown chain, blown b) + p |chain|
    const Rational lambda = Rational(nu) * w.gap / norm.scale;
    const long long q = lambda.denominator(), pen = lambda.numerator();
    const Text ab = blow_up(a, norm.mu, norm.nu), bb = blow_up(b, norm.mu, norm.nu);
    const int nb = static_cast<int>(bb.size());

    std::vector<std::vector<int>> ending(static_cast<std::size_t>(m + 1));
    for (int e = 0; e < static_cast<int>(exons.size()); ++e) ending[exons[e].second].push_back(e);
    CanonicalForest f(ab, bb);
    auto through = [&](const std::vector<long long>& v, int i, int j) {
        std::vector<long long> out = v;
        for (auto [st, s] : CanonicalForest::decompose(nu * i, nu * j)) out = extend(out, f.canonical(st, s), q);
        for (auto& x : out) x += pen * (j - i);
        return out;
    };

    std::vector<std::vector<long long>> u(static_cast<std::size_t>(m + 1));
    u[0].assign(static_cast<std::size_t>(nb + 1), 0);
    for (int j = 1; j <= m; ++j) {
        u[j] = u[j - 1];
        for (int e : ending[j]) {
            auto v = through(u[exons[e].first], exons[e].first, j);
            for (int s = 0; s <= nb; ++s) u[j][s] = std::max(u[j][s], v[s]);
        }
    }

    Spliced out;
    out.score = Rational(u[m][nb], q) * norm.scale / Rational(nu) + w.gap * Rational(n);
    int j = m, s = nb;
    while (j > 0) {
        if (u[j][s] == u[j - 1][s]) {
            --j;
            continue;
        }
        bool found = false;
        for (int e : ending[j]) {
            const int i = exons[e].first;
            PermutationMatrix p = f.substring(nu * i, nu * j);
            DominanceCounter dc(p);
            for (int s0 = 0; s0 <= s && !found; ++s0) {
                long long val = u[i][s0] + q * (s - s0 - dc.query(s0, s)) + pen * (j - i);
                if (val == u[j][s]) {
                    out.chain.emplace_back(i, j);
                    j = i;
                    s = s0;
                    found = true;
                }
            }
            if (found) break;
        }
        if (!found) throw Error("spliced alignment: traceback failed");
    }
    std::reverse(out.chain.begin(), out.chain.end());
    return out;
}

}  // namespace slcs
