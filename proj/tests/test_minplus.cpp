#include <doctest.h>

#include "oracles.hpp"
#include "slcs/minplus.hpp"

#include <algorithm>

using namespace slcs;

namespace {

std::vector<int> scan_minima(const ExplicitMatrix& a) {
    std::vector<int> arg;
    for (int i = 0; i < a.rows(); ++i) {
        int best = 0;
        for (int j = 1; j < a.cols(); ++j)
            if (a.at(i, j) < a.at(i, best)) best = j;
        arg.push_back(best);
    }
    return arg;
}

ExplicitMatrix random_monge(oracle::Rng& rng, int rows, int cols, int spread) {
    ExplicitMatrix a(rows, cols);
    for (int t = 0; t < 2; ++t) {
        auto d = distribution_matrix(rng.subpermutation(rows - 1, cols - 1, 100));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a.at(i, j) += d.at(i, j);
    }
    for (int i = 0; i < rows; ++i) {
        Ext u = rng.uniform(-spread, spread);
        for (int j = 0; j < cols; ++j) a.at(i, j) += u;
    }
    for (int j = 0; j < cols; ++j) {
        Ext v = rng.uniform(-spread, spread);
        for (int i = 0; i < rows; ++i) a.at(i, j) += v;
    }
    return a;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST_CASE("smawk on small and diagonal matrices") {
    auto one = smawk_row_minima(1, 1, [](int, int) { return 5; });
    CHECK(one == std::vector<int>{0});
    auto diag = smawk_row_minima(9, 9, [](int i, int j) { return std::abs(i - j); });
    for (int i = 0; i < 9; ++i) CHECK(diag[i] == i);
    CHECK_THROWS_AS(smawk_row_minima(0, 3, [](int, int) { return 0; }), Error);
}

TEST_CASE("smawk matches a full scan with leftmost ties") {
    oracle::Rng rng(31);
    for (int t = 0; t < 400; ++t) {
        int rows = rng.uniform(2, 64), cols = rng.uniform(2, 64);
        // small spread yields many ties
        auto a = random_monge(rng, rows, cols, t % 2 ? 1 : 20);
        REQUIRE(is_monge(a));
        auto got = smawk_row_minima(rows, cols, [&](int i, int j) { return a.at(i, j); });
        REQUIRE(got == scan_minima(a));
    }
}

TEST_CASE("monge matrix-vector product") {
    oracle::Rng rng(32);
    for (int t = 0; t < 100; ++t) {
        int n = rng.uniform(2, 30);
        auto a = random_monge(rng, n, n, 10);
        std::vector<Ext> b(n);
        for (auto& x : b) x = rng.uniform(-20, 20);
        auto c = monge_matvec(n, [&](int i, int j) { return a.at(i, j); }, b);
        for (int i = 0; i < n; ++i) {
            Ext best = POS_INF;
            for (int j = 0; j < n; ++j) best = std::min(best, a.at(i, j) + b[j]);
            REQUIRE(c[i] == best);
        }
        std::vector<Ext> zero(n, 0);
        auto m = monge_matvec(n, [&](int i, int j) { return a.at(i, j); }, zero);
        for (int i = 0; i < n; ++i) REQUIRE(m[i] == a.at(i, scan_minima(a)[i]));
    }
    // identity element of the distance product
    auto id = identity_minplus(7);
    std::vector<Ext> b{4, -2, 9, 0, 3, 3, -7};
    auto c = monge_matvec(7, [&](int i, int j) { return id.at(i, j); }, b);
    CHECK(c == b);
}

TEST_CASE("implicit matrix-vector product") {
    oracle::Rng rng(33);
    for (int t = 0; t < 200; ++t) {
        int n = rng.uniform(0, 64);
        auto p = rng.permutation(n);
        auto d = distribution_matrix(p);
        std::vector<long long> b(n + 1);
        for (auto& x : b) x = rng.uniform(-30, 30);
        auto c = implicit_matvec(p, b);
        auto cm = monge_matvec(n + 1, [&](int i, int j) { return static_cast<long long>(d.at(i, j)); }, b);
        REQUIRE(c == cm);
        for (int i = 0; i <= n; ++i) {
            long long best = POS_INF;
            for (int j = 0; j <= n; ++j) best = std::min(best, d.at(i, j) + b[j]);
            REQUIRE(c[i] == best);
        }
        auto r = implicit_vecmat(b, p);
        for (int j = 0; j <= n; ++j) {
            long long best = POS_INF;
            for (int i = 0; i <= n; ++i) best = std::min(best, b[i] + d.at(i, j));
            REQUIRE(r[j] == best);
        }
        std::vector<long long> zero(n + 1, 0);
        for (long long v : implicit_matvec(p, zero)) REQUIRE(v == 0);
    }
    auto id = PermutationMatrix::identity(10);
    std::vector<long long> b(11);
    for (int j = 0; j <= 10; ++j) b[j] = (j * 7) % 5 - 2;
    auto c = implicit_matvec(id, b);
    for (int i = 0; i <= 10; ++i) {
        long long best = POS_INF;
        for (int j = i; j <= 10; ++j) best = std::min(best, j - i + b[j]);
        best = std::min(best, b[0] + 0LL);
        for (int j = 0; j < i; ++j) best = std::min(best, b[j]);
        CHECK(c[i] == best);
    }
    CHECK_THROWS_AS(implicit_matvec(id, std::vector<long long>(3)), Error);
}

TEST_CASE("naive distance product laws") {
    oracle::Rng rng(34);
    for (int t = 0; t < 30; ++t) {
        int n = rng.uniform(1, 8);
        auto a = random_monge(rng, n, n, 5), b = random_monge(rng, n, n, 5), c = random_monge(rng, n, n, 5);
        CHECK(naive_distance_product(a, identity_minplus(n)) == a);
        CHECK(naive_distance_product(identity_minplus(n), a) == a);
        CHECK(naive_distance_product(a, zero_minplus(n, n)) == zero_minplus(n, n));
        CHECK(naive_distance_product(naive_distance_product(a, b), c) == naive_distance_product(a, naive_distance_product(b, c)));
    }
    CHECK_THROWS_AS(naive_distance_product(ExplicitMatrix(2, 3), ExplicitMatrix(2, 3)), Error);
}

TEST_CASE("implicit product equals the dense oracle for all pairs up to 6") {
    for (int n = 0; n <= 6; ++n) {
        auto perms = all_perms(n);
        for (auto& x : perms)
            for (auto& y : perms) {
                auto a = PermutationMatrix::from_rows(x), b = PermutationMatrix::from_rows(y);
                REQUIRE(implicit_matmul(a, b) == dense_matmul(a, b));
            }
    }
}

TEST_CASE("implicit product on random pairs") {
    oracle::Rng rng(35);
    for (int t = 0; t < 200; ++t) {
        int n = rng.uniform(1, 256);
        auto a = rng.permutation(n), b = rng.permutation(n);
        REQUIRE(implicit_matmul(a, b) == dense_matmul(a, b));
    }
    CHECK_THROWS_AS(implicit_matmul(PermutationMatrix::identity(2), PermutationMatrix::identity(3)), Error);
    CHECK_THROWS_AS(implicit_matmul(PermutationMatrix(2), PermutationMatrix(2)), Error);
}

TEST_CASE("figure example of the implicit product") {
    auto a = PermutationMatrix::from_rows({1, 2, 4, 0, 5, 3});
    auto b = PermutationMatrix::from_rows({3, 0, 1, 4, 5, 2});
    auto c = PermutationMatrix::from_rows({3, 1, 5, 0, 4, 2});
    CHECK(dense_matmul(a, b) == c);
    CHECK(implicit_matmul(a, b) == c);
}

TEST_CASE("identity, annihilator, associativity") {
    oracle::Rng rng(36);
    for (int t = 0; t < 60; ++t) {
        int n = rng.uniform(0, 128);
        auto p = rng.permutation(n), q = rng.permutation(n), r = rng.permutation(n);
        auto id = PermutationMatrix::identity(n);
        auto zero = rotate(id);
        REQUIRE(implicit_matmul(p, id) == p);
        REQUIRE(implicit_matmul(id, p) == p);
        REQUIRE(implicit_matmul(p, zero) == zero);
        REQUIRE(implicit_matmul(zero, p) == zero);
        REQUIRE(implicit_matmul(implicit_matmul(p, q), r) == implicit_matmul(p, implicit_matmul(q, r)));
    }
}

TEST_CASE("seaweed monoid relations") {
    for (int n = 2; n <= 8; ++n)
        for (int t = 1; t < n; ++t) {
            auto gt = elementary(n, t);
            REQUIRE(implicit_matmul(gt, gt) == gt);
            for (int u = 1; u < n; ++u) {
                auto gu = elementary(n, u);
                if (std::abs(t - u) >= 2) REQUIRE(implicit_matmul(gt, gu) == implicit_matmul(gu, gt));
                if (std::abs(t - u) == 1)
                    REQUIRE(implicit_matmul(implicit_matmul(gt, gu), gt) == implicit_matmul(implicit_matmul(gu, gt), gu));
            }
        }
}

TEST_CASE("subpermutation products") {
    oracle::Rng rng(37);
    for (int t = 0; t < 300; ++t) {
        int r = rng.uniform(0, 12), k = rng.uniform(0, 12), c = rng.uniform(0, 12);
        auto a = rng.subpermutation(r, k, rng.uniform(0, 100));
        auto b = rng.subpermutation(k, c, rng.uniform(0, 100));
        auto got = subperm_matmul(a, b);
        REQUIRE(got == dense_matmul(a, b));
        REQUIRE(got.n_rows() == r);
        REQUIRE(got.n_cols() == c);
    }
    CHECK_THROWS_AS(subperm_matmul(PermutationMatrix(2, 3), PermutationMatrix(2, 2)), Error);
}

TEST_CASE("bruhat order") {
    for (int n = 0; n <= 6; ++n) {
        auto perms = all_perms(n);
        auto id = PermutationMatrix::identity(n);
        for (auto& x : perms) {
            auto a = PermutationMatrix::from_rows(x);
            REQUIRE(bruhat_leq(id, a));
            REQUIRE(bruhat_leq(a, rotate(id)));
            for (auto& y : perms) {
                auto b = PermutationMatrix::from_rows(y);
                REQUIRE(bruhat_leq(a, b) == bruhat_leq_naive(a, b));
            }
        }
    }
}
