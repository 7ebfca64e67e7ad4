#include <doctest.h>

#include "oracles.hpp"
#include "slcs/semilocal.hpp"

#include <sstream>

using namespace slcs;
using oracle::lcs;
using oracle::sub;

namespace {

const Text RA = encode("baabcbca");
const Text RB = encode("baabcabcabaca");

void check_families(const Text& a, const Text& b) {
    ScoreOracle o(a, b);
    const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) REQUIRE(o.score(ScoreKind::string_substring, i, j) == lcs(a, sub(b, i, j)));
    for (int k = 0; k <= m; ++k)
        for (int j = 0; j <= n; ++j) {
            REQUIRE(o.score(ScoreKind::prefix_suffix, k, j) == lcs(sub(a, 0, k), sub(b, j, n)));
            REQUIRE(o.score(ScoreKind::suffix_prefix, k, j) == lcs(sub(a, k, m), sub(b, 0, j)));
        }
    for (int l = 0; l <= m; ++l)
        for (int r = l; r <= m; ++r) REQUIRE(o.score(ScoreKind::substring_string, l, r) == lcs(sub(a, l, r), b));
}

}  // namespace

TEST_CASE("running example") {
    auto sw = seaweed_build(RA, RB);
    CHECK(sw.m == 8);
    CHECK(sw.n == 13);
    CHECK(sw.perm.is_full());
    CHECK(sw.perm.nonzeros() == 21);
    CHECK(sw.perm.row(6) == 12);

    ScoreOracle o(RA, RB, sw);
    CHECK(o.score(ScoreKind::string_substring, 0, 13) == 8);
    CHECK(o.score(ScoreKind::string_substring, 4, 11) == 5);

    // (4,11) sits at stored row 12, stored column 11
    int dominated = 0, dominating = 0;
    for (auto [r, c] : sw.perm.pairs()) {
        if (r >= 12 && c < 11) ++dominated;
        if (r < 12 && c >= 11) ++dominating;
    }
    CHECK(dominated == 2);
    CHECK(dominating == 3);
    CHECK(11 - 4 - dominated == 5);
    CHECK(8 - dominating == 5);

    auto w = o.traceback(4, 11);
    CHECK(w.size() == 5);
    CHECK(oracle::is_subsequence(w, RA));
    CHECK(oracle::is_subsequence(w, sub(RB, 4, 11)));
    CHECK(o.traceback(3, 3).empty());
    for (int i = 0; i <= 8; ++i) CHECK(o.score(ScoreKind::substring_string, i, i) == 0);
}

TEST_CASE("trivial builds") {
    auto one = seaweed_build(encode("x"), encode("x"));
    CHECK(one.perm == PermutationMatrix::identity(2));
    auto empty = seaweed_build(Text{}, Text{});
    CHECK(empty.perm.size() == 0);
    auto only_b = seaweed_build(Text{}, encode("abc"));
    CHECK(only_b.perm == PermutationMatrix::identity(3));
    ScoreOracle o(Text{}, encode("abc"));
    CHECK(o.score(ScoreKind::string_substring, 0, 3) == 0);
}

TEST_CASE("score families against the dp") {
    oracle::Rng rng(41);
    for (int t = 0; t < 60; ++t) {
        int m = rng.uniform(0, 12), n = rng.uniform(0, 12);
        check_families(rng.text(m, t % 3 + 2), rng.text(n, t % 3 + 2));
    }
    check_families(RA, RB);
    check_families(encode("a?c$b"), encode("ab$$cc?a"));
}

TEST_CASE("range errors") {
    ScoreOracle o(RA, RB);
    CHECK_THROWS_AS(o.score(ScoreKind::string_substring, 5, 4), Error);
    CHECK_THROWS_AS(o.score(ScoreKind::string_substring, 0, 14), Error);
    CHECK_THROWS_AS(o.score(ScoreKind::prefix_suffix, 9, 0), Error);
    CHECK_THROWS_AS(o.score(ScoreKind::suffix_prefix, -1, 0), Error);
    CHECK_THROWS_AS(o.score(ScoreKind::substring_string, 2, 9), Error);
    CHECK_THROWS_AS(o.h(-9, 0), Error);
    CHECK_THROWS_AS(o.traceback(4, 3), Error);
    CHECK_THROWS_AS(ScoreOracle(RA, RB, seaweed_build(RB, RA)), Error);
}

TEST_CASE("unit anti-monge law and score bounds") {
    oracle::Rng rng(42);
    for (int t = 0; t < 40; ++t) {
        int m = rng.uniform(0, 10), n = rng.uniform(0, 10);
        auto a = rng.text(m, 3), b = rng.text(n, 3);
        ScoreOracle o(a, b);
        const auto& p = o.seaweed().perm;
        for (int i = -m; i < n; ++i)
            for (int j = 0; j < m + n; ++j) {
                int box = o.h(i, j + 1) - o.h(i, j) - o.h(i + 1, j + 1) + o.h(i + 1, j);
                REQUIRE(box == -(p.col(i + m) == j ? 1 : 0));
            }
        for (int i = -m; i <= n; ++i)
            for (int j = std::max(i, 0); j <= m + n; ++j) {
                REQUIRE(o.h(i, j) >= 0);
                REQUIRE(o.h(i, j) <= std::min(m, j - i));
            }
    }
}

TEST_CASE("subsequence criterion") {
    oracle::Rng rng(43);
    for (int t = 0; t < 60; ++t) {
        int m = rng.uniform(0, 4), n = rng.uniform(0, 14);
        auto a = rng.text(m, 2), b = rng.text(n, 2);
        auto pt = transpose(seaweed_build(a, b).perm);
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                REQUIRE((distribution_value(pt, j, i + m) == 0) == oracle::is_subsequence(a, sub(b, i, j)));
    }
}

TEST_CASE("traceback witnesses") {
    oracle::Rng rng(44);
    for (int t = 0; t < 100; ++t) {
        auto a = rng.text(rng.uniform(0, 15), 3), b = rng.text(rng.uniform(0, 15), 3);
        ScoreOracle o(a, b);
        int n = static_cast<int>(b.size());
        int i = rng.uniform(0, n), j = rng.uniform(i, n);
        auto w = o.traceback(i, j);
        REQUIRE(static_cast<int>(w.size()) == o.score(ScoreKind::string_substring, i, j));
        REQUIRE(oracle::is_subsequence(w, a));
        REQUIRE(oracle::is_subsequence(w, sub(b, i, j)));
    }
}

TEST_CASE("swap") {
    auto sw = seaweed_build(RA, RB);
    CHECK(swap(swap(sw)) == sw);
    CHECK(swap(sw) == seaweed_build(RB, RA));
    auto x = seaweed_build(encode("a"), encode("b"));
    CHECK(swap(x) == x);
    oracle::Rng rng(45);
    for (int t = 0; t < 50; ++t) {
        auto a = rng.text(rng.uniform(0, 20), 3), b = rng.text(rng.uniform(0, 20), 3);
        REQUIRE(swap(seaweed_build(a, b)) == seaweed_build(b, a));
    }
}

TEST_CASE("horizontal composition") {
    auto left = seaweed_build(encode("baab"), RB), right = seaweed_build(encode("cbca"), RB);
    CHECK(compose_horizontal(left, right) == seaweed_build(RA, RB));
    CHECK(compose_horizontal_direct(left, right) == seaweed_build(RA, RB));

    auto none = seaweed_build(Text{}, RB);
    CHECK(compose_horizontal(left, none) == left);
    CHECK(compose_horizontal(none, left) == left);

    oracle::Rng rng(46);
    for (int t = 0; t < 300; ++t) {
        int m = rng.uniform(0, 16), n = rng.uniform(0, 16), k = rng.uniform(0, m);
        auto a = rng.text(m, 3), b = rng.text(n, 3);
        auto l = seaweed_build(sub(a, 0, k), b), r = seaweed_build(sub(a, k, m), b);
        auto whole = seaweed_build(a, b);
        REQUIRE(compose_horizontal(l, r) == whole);
        REQUIRE(compose_horizontal_direct(l, r) == whole);
    }
    // long b exercises the staggered blocks
    for (int t = 0; t < 100; ++t) {
        int m1 = rng.uniform(0, 20), m2 = rng.uniform(1, 12), n = rng.uniform(2 * m2, 200);
        auto a1 = rng.text(m1, 4), a2 = rng.text(m2, 4), b = rng.text(n, 4);
        REQUIRE(compose_horizontal(seaweed_build(a1, b), seaweed_build(a2, b)) == seaweed_build(oracle::cat(a1, a2), b));
    }
    CHECK_THROWS_AS(compose_horizontal(left, seaweed_build(RA, RA)), Error);
}

TEST_CASE("composition is associative") {
    oracle::Rng rng(47);
    for (int t = 0; t < 100; ++t) {
        auto b = rng.text(rng.uniform(0, 30), 3);
        auto x = seaweed_build(rng.text(rng.uniform(0, 8), 3), b);
        auto y = seaweed_build(rng.text(rng.uniform(0, 8), 3), b);
        auto z = seaweed_build(rng.text(rng.uniform(0, 8), 3), b);
        REQUIRE(compose_horizontal(compose_horizontal(x, y), z) == compose_horizontal(x, compose_horizontal(y, z)));
    }
}

TEST_CASE("vertical composition") {
    oracle::Rng rng(48);
    for (int t = 0; t < 200; ++t) {
        int n = rng.uniform(0, 40), k = rng.uniform(0, n);
        auto a = rng.text(rng.uniform(0, 14), 3), b = rng.text(n, 3);
        REQUIRE(compose_vertical(seaweed_build(a, sub(b, 0, k)), seaweed_build(a, sub(b, k, n))) == seaweed_build(a, b));
    }
    CHECK_THROWS_AS(compose_vertical(seaweed_build(RA, RB), seaweed_build(RB, RB)), Error);
}

TEST_CASE("blocks and three-way composition") {
    auto sw = seaweed_build(RA, RB);
    int total = 0;
    for (auto w : {Block::df, Block::fd, Block::uf, Block::fu}) total += block(sw, w).nonzeros();
    CHECK(total == 21);
    // lcs(a,b) equals the number of suffix-prefix nonzeros
    CHECK(block(sw, Block::uf).nonzeros() == 8);
    CHECK(three_way(sw).block(Block::fu).nonzeros() == 0);

    oracle::Rng rng(49);
    for (int t = 0; t < 300; ++t) {
        int m = rng.uniform(0, 14), n = rng.uniform(0, 14), k = rng.uniform(0, m);
        auto a = rng.text(m, 3), b = rng.text(n, 3);
        auto [tw, cross] = compose_three_way(three_way(seaweed_build(sub(a, 0, k), b)), three_way(seaweed_build(sub(a, k, m), b)));
        auto whole = seaweed_build(a, b);
        REQUIRE(tw == three_way(whole));
        REQUIRE(cross.x.nonzeros() == n);
        // cross-matrix rows are rows of P_{a,b} shifted by the right part's length
        for (auto [r, c] : cross.x.pairs()) REQUIRE(whole.perm.col(r + (m - k)) == c);
    }
    // chaining single characters
    ThreeWay acc = three_way(seaweed_build(Text{}, RB));
    for (Symbol c : RA) acc = compose_three_way(acc, three_way(seaweed_build(Text{c}, RB))).first;
    CHECK(acc == three_way(sw));
}

TEST_CASE("seaweed tsv round trip") {
    auto sw = seaweed_build(RA, RB);
    std::stringstream ss;
    write_seaweed(ss, sw);
    CHECK(read_seaweed(ss) == sw);
    std::stringstream bad("2 1\n0\t0\n");
    CHECK_THROWS_AS(read_seaweed(bad), Error);
}
