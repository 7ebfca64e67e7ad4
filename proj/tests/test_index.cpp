#include <doctest.h>

#include "oracles.hpp"
#include "slcs/index.hpp"
#include "slcs/minplus.hpp"

#include <sstream>

using namespace slcs;

namespace {

PermutationMatrix example3() { return PermutationMatrix::from_pairs(3, {{0, 1}, {1, 0}, {2, 2}}); }

ExplicitMatrix dense(std::initializer_list<std::initializer_list<Ext>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.begin()->size());
    ExplicitMatrix m(r, c);
    int i = 0;
    for (auto& row : rows) {
        int j = 0;
        for (Ext v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

ExplicitMatrix random_monge(oracle::Rng& rng, int rows, int cols) {
    ExplicitMatrix a(rows, cols);
    for (int t = 0; t < 3; ++t) {
        auto d = distribution_matrix(rng.subpermutation(rows - 1, cols - 1, 100));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a.at(i, j) += d.at(i, j);
    }
    std::vector<Ext> u(rows), v(cols);
    for (auto& x : u) x = rng.uniform(-5, 5);
    for (auto& x : v) x = rng.uniform(-5, 5);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a.at(i, j) += u[i] + v[j];
    return a;
}

}  // namespace

TEST_CASE("distribution of the 3x3 example") {
    auto p = example3();
    CHECK(distribution_value(p, 0, 3) == 3);
    CHECK(distribution_value(p, 3, 0) == 0);
    auto expect = dense({{0, 1, 2, 3}, {0, 1, 1, 2}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    CHECK(distribution_matrix(p) == expect);
    CHECK_THROWS_AS(distribution_value(p, 4, 0), Error);
    CHECK_THROWS_AS(distribution_value(p, 0, -1), Error);
}

TEST_CASE("distribution agrees with a direct sweep") {
    oracle::Rng rng(11);
    for (int n : {0, 1, 2, 5, 8, 17, 64}) {
        auto p = n % 2 ? rng.subpermutation(n, n) : rng.permutation(n);
        auto d = distribution_matrix(p);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                int direct = 0;
                for (auto [r, c] : p.pairs()) direct += (r >= i && c < j);
                REQUIRE(d.at(i, j) == direct);
                REQUIRE(distribution_value(p, i, j) == direct);
            }
    }
}

TEST_CASE("density inverts distribution") {
    auto p = example3();
    CHECK(to_permutation(density_matrix(distribution_matrix(p))) == p);
    ExplicitMatrix constant(4, 5, 7);
    auto d = density_matrix(constant);
    for (int r = 0; r < d.rows(); ++r)
        for (int c = 0; c < d.cols(); ++c) CHECK(d.at(r, c) == 0);
    CHECK_THROWS_AS(density_value(constant, 3, 0), Error);

    oracle::Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        int n = rng.uniform(1, 32);
        auto q = rng.permutation(n);
        REQUIRE(to_permutation(density_matrix(distribution_matrix(q))) == q);
        ExplicitMatrix a(n + 1, n + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 1; j <= n; ++j) a.at(i, j) = rng.uniform(-9, 9);
        REQUIRE(is_simple(a));
        REQUIRE(distribution_of(density_matrix(a)) == a);
    }
}

TEST_CASE("monge checks") {
    CHECK(is_monge(distribution_matrix(example3())));
    // density +2: Monge under the density sign convention
    CHECK(is_monge(dense({{0, 1}, {1, 0}})));
    CHECK_FALSE(is_monge(dense({{1, 0}, {0, 1}})));
    CHECK(density_value(dense({{1, 0}, {0, 1}}), 0, 0) == -2);

    oracle::Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        int n = rng.uniform(2, 9);
        auto a = random_monge(rng, n, n + 1);
        auto b = random_monge(rng, n + 1, n - 1 > 1 ? n - 1 : 2);
        REQUIRE(is_monge(a));
        REQUIRE(is_monge(naive_distance_product(a, b)));
    }
}

TEST_CASE("simple unit-Monge characterization") {
    oracle::Rng rng(14);
    for (int t = 0; t < 60; ++t) {
        int n = rng.uniform(1, 7);
        auto a = distribution_matrix(rng.permutation(n));
        REQUIRE(is_simple_unit_monge(a));
        auto b = a;
        b.at(rng.uniform(0, n - 1), rng.uniform(1, n)) += 1;
        REQUIRE_FALSE(is_simple_unit_monge(b));
        auto sub = distribution_matrix(rng.subpermutation(n, n, 50));
        bool full = true;
        for (int j = 0; j <= n; ++j) full = full && sub.at(0, j) == j;
        REQUIRE(is_simple_unit_monge(sub) == full);
    }
}

TEST_CASE("rotation and transposition") {
    auto r = rotate(PermutationMatrix::identity(3));
    CHECK(r == PermutationMatrix::from_rows({2, 1, 0}));
    // counterclockwise: the top-right nonzero moves to the top-left
    CHECK(rotate(PermutationMatrix::from_pairs(3, {{0, 2}, {1, 0}, {2, 1}})).col(0) == 0);
    oracle::Rng rng(15);
    for (int t = 0; t < 30; ++t) {
        auto p = rng.permutation(rng.uniform(0, 12));
        CHECK(rotate(rotate(rotate(rotate(p)))) == p);
        CHECK(transpose(transpose(p)) == p);
        CHECK(rotate(rotate(p)) == rotate_half(p));
        // A^R(i,j) = A(j, n-i) on distribution matrices up to the complement
        int n = p.size();
        auto d = distribution_matrix(p), dr = distribution_matrix(rotate(p));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) REQUIRE(dr.at(i, j) == (n - i) - d.at(j, n - i));
    }
}

TEST_CASE("induced submatrices") {
    oracle::Rng rng(16);
    auto p = rng.permutation(6);
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(induced(p, Axis::rows, all) == p);
    CHECK(induced(p, Axis::cols, all) == p);
    CHECK(induced(p, Axis::rows, {}).n_rows() == 0);
    CHECK(induced(p, Axis::rows, {}).n_cols() == 0);
    CHECK_THROWS_AS(induced(p, Axis::rows, {3, 1}), Error);

    for (int t = 0; t < 100; ++t) {
        int n = rng.uniform(1, 12);
        auto q = rng.subpermutation(n, n, 80);
        std::vector<int> keep;
        for (int k = 0; k < n; ++k)
            if (rng.uniform(0, 1)) keep.push_back(k);
        bool by_rows = rng.uniform(0, 1);
        auto got = induced(q, by_rows ? Axis::rows : Axis::cols, keep);
        // dense deletion
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
        for (auto [r, c] : q.pairs()) m[r][c] = 1;
        if (!by_rows)
            for (auto& row : m) {
                std::vector<int> kept;
                for (int k : keep) kept.push_back(row[k]);
                row = kept;
            }
        else {
            std::vector<std::vector<int>> kept;
            for (int k : keep) kept.push_back(m[k]);
            m = kept;
        }
        std::vector<std::vector<int>> lines;
        if (by_rows) {
            int cols = n;
            std::vector<int> nz_cols;
            for (int c = 0; c < cols; ++c) {
                bool any = false;
                for (auto& row : m) any = any || row[c];
                if (any) nz_cols.push_back(c);
            }
            REQUIRE(got.n_rows() == static_cast<int>(keep.size()));
            REQUIRE(got.n_cols() == static_cast<int>(nz_cols.size()));
            for (std::size_t r = 0; r < m.size(); ++r)
                for (std::size_t c = 0; c < nz_cols.size(); ++c) REQUIRE((got.col(r) == static_cast<int>(c)) == (m[r][nz_cols[c]] == 1));
        } else {
            std::vector<int> nz_rows;
            for (int r = 0; r < n; ++r) {
                bool any = false;
                for (int v : m[r]) any = any || v;
                if (any) nz_rows.push_back(r);
            }
            REQUIRE(got.n_cols() == static_cast<int>(keep.size()));
            REQUIRE(got.n_rows() == static_cast<int>(nz_rows.size()));
            for (std::size_t r = 0; r < nz_rows.size(); ++r)
                for (std::size_t c = 0; c < keep.size(); ++c) REQUIRE((got.col(r) == static_cast<int>(c)) == (m[nz_rows[r]][c] == 1));
        }
    }
}

TEST_CASE("elementary transpositions") {
    CHECK(elementary(2, 1) == PermutationMatrix::from_rows({1, 0}));
    CHECK(elementary(4, 2).nonzeros() == 4);
    CHECK(elementary(4, 2) == PermutationMatrix::from_rows({0, 2, 1, 3}));
    CHECK_THROWS_AS(elementary(4, 0), Error);
    CHECK_THROWS_AS(elementary(4, 4), Error);
    auto g = elementary(5, 3);
    CHECK(implicit_matmul(g, g) == g);
}

TEST_CASE("tsv round trip") {
    oracle::Rng rng(17);
    auto p = rng.subpermutation(9, 9);
    std::stringstream ss;
    write_tsv(ss, p);
    CHECK(read_tsv(ss, 9) == p);
    std::stringstream bad("0\tx\n");
    CHECK_THROWS_AS(read_tsv(bad, 3), Error);
}

TEST_CASE("text encoding") {
    auto t = encode("a?$b");
    CHECK(t == Text{'a', WILDCARD, DOLLAR, 'b'});
    CHECK(encode("a?$b", true) == Text{'a', '?', '$', 'b'});
    CHECK(decode(t) == "a?$b");
    CHECK(matches('a', WILDCARD));
    CHECK_FALSE(matches(DOLLAR, WILDCARD));
    CHECK(matches(DOLLAR, DOLLAR));
    CHECK_FALSE(matches('a', 'b'));
}
