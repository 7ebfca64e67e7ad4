#pragma once

#include "slcs/dominance.hpp"
#include "slcs/index.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace slcs {

namespace detail {

// Column elimination over the given rows; returns surviving columns.
template <class F>
std::vector<int> eliminate_columns(const std::vector<int>& rows, const std::vector<int>& cols, F& f) {
    const int q = static_cast<int>(rows.size());
    const int c = static_cast<int>(cols.size());
    if (c <= 1 || q == 0) return cols;
    std::vector<int> prev(static_cast<std::size_t>(c)), next(static_cast<std::size_t>(c));
    for (int k = 0; k < c; ++k) {
        prev[k] = k - 1;
        next[k] = k + 1;
    }
    int head = 0;
    auto unlink = [&](int k) {
        if (prev[k] >= 0) next[prev[k]] = next[k];
        else head = next[k];
        if (next[k] < c) prev[next[k]] = prev[k];
    };
    int i = 0, j = 0, jp = 1;
    while (jp < c) {
        if (!(f(rows[i], cols[jp]) < f(rows[i], cols[j]))) {
            if (i < q - 1) {
                ++i;
                j = jp;
            } else {
                unlink(jp);
            }
            ++jp;
        } else {
            int before = prev[j];
            unlink(j);
            if (i == 0) {
                j = jp;
                ++jp;
            } else {
                --i;
                j = before;
            }
        }
    }
    std::vector<int> out;
    for (int k = head; k < c; k = next[k]) out.push_back(cols[k]);
    return out;
}

template <class F>
void smawk_rec(const std::vector<int>& rows, const std::vector<int>& cols, F& f, std::vector<int>& arg) {
    if (rows.empty()) return;
    if (rows.size() == 1) {
        int best = cols.front();
        auto bv = f(rows[0], best);
        for (std::size_t k = 1; k < cols.size(); ++k) {
            auto v = f(rows[0], cols[k]);
            if (v < bv) {
                bv = v;
                best = cols[k];
            }
        }
        arg[rows[0]] = best;
        return;
    }
    std::vector<int> odd;
    for (std::size_t k = 1; k < rows.size(); k += 2) odd.push_back(rows[k]);
    std::vector<int> reduced = eliminate_columns(odd, cols, f);
    smawk_rec(odd, reduced, f, arg);
    std::size_t pos = 0;
    for (std::size_t k = 0; k < rows.size(); k += 2) {
        int hi = k + 1 < rows.size() ? arg[rows[k + 1]] : cols.back();
        while (cols[pos] < (k > 0 ? arg[rows[k - 1]] : cols.front())) ++pos;
        int best = cols[pos];
        auto bv = f(rows[k], best);
        std::size_t p = pos + 1;
        for (; p < cols.size() && cols[p] <= hi; ++p) {
            auto v = f(rows[k], cols[p]);
            if (v < bv) {
                bv = v;
                best = cols[p];
            }
        }
        arg[rows[k]] = best;
    }
}

}  // namespace detail

// Leftmost row minima of a totally monotone rows x cols matrix given by f(i,j).
template <class F>
std::vector<int> smawk_row_minima(int rows, int cols, F&& f) {
    if (rows <= 0 || cols <= 0) throw Error("smawk: empty matrix");
    std::vector<int> r(static_cast<std::size_t>(rows)), c(static_cast<std::size_t>(cols));
    std::iota(r.begin(), r.end(), 0);
    std::iota(c.begin(), c.end(), 0);
    std::vector<int> arg(static_cast<std::size_t>(rows), 0);
    detail::smawk_rec(r, c, f, arg);
    return arg;
}

// c(i) = min_j A(i,j) + b(j) for Monge A.
template <class T, class F>
std::vector<T> monge_matvec(int rows, F&& a, const std::vector<T>& b) {
    const int cols = static_cast<int>(b.size());
    auto shifted = [&](int i, int j) { return a(i, j) + b[j]; };
    auto arg = smawk_row_minima(rows, cols, shifted);
    std::vector<T> c(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) c[i] = shifted(i, arg[i]);
    return c;
}

// c(i) = min_j P^Sigma(i,j) + b(j), |b| = n+1, via incremental queries.
std::vector<long long> implicit_matvec(const PermutationMatrix& p, const std::vector<long long>& b);
// c(j) = min_i b(i) + P^Sigma(i,j).
std::vector<long long> implicit_vecmat(const std::vector<long long>& b, const PermutationMatrix& p);

ExplicitMatrix naive_distance_product(const ExplicitMatrix& a, const ExplicitMatrix& b);
ExplicitMatrix identity_minplus(int n);
ExplicitMatrix zero_minplus(int rows, int cols);

// P_C with P_A^Sigma (min,+) P_B^Sigma = P_C^Sigma, for full permutations.
PermutationMatrix implicit_matmul(const PermutationMatrix& a, const PermutationMatrix& b);
// Same product for rectangular subpermutations (rows x k) and (k x cols).
PermutationMatrix subperm_matmul(const PermutationMatrix& a, const PermutationMatrix& b);
// Dense reference for both products.
PermutationMatrix dense_matmul(const PermutationMatrix& a, const PermutationMatrix& b);

bool bruhat_leq(const PermutationMatrix& a, const PermutationMatrix& b);
bool bruhat_leq_naive(const PermutationMatrix& a, const PermutationMatrix& b);

}  // namespace slcs
