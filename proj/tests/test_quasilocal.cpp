#include <doctest.h>

#include "oracles.hpp"
#include "slcs/dominance.hpp"
#include "slcs/minplus.hpp"
#include "slcs/quasilocal.hpp"
#include "slcs/semilocal.hpp"

#include <algorithm>

using namespace slcs;
using oracle::Rng;

namespace {

PermutationMatrix direct(const Text& a, const Text& b, int i, int j) {
    return block(seaweed_build(oracle::sub(a, i, j), b), Block::df);
}

Rational chain_score(const Text& a, const Text& b, const std::vector<std::pair<int, int>>& chain, const Weights& w) {
    Text c;
    for (auto [i, j] : chain) c = oracle::cat(c, oracle::sub(a, i, j));
    return oracle::align<Rational>(c, b, w.match, w.mismatch, w.gap);
}

Rational best_chain(const Text& a, const Text& b, const std::vector<std::pair<int, int>>& exons, const Weights& w) {
    const int k = static_cast<int>(exons.size());
    Rational best = w.gap * Rational(static_cast<long long>(b.size()));
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<std::pair<int, int>> chain;
        for (int e = 0; e < k; ++e)
            if (mask >> e & 1) chain.push_back(exons[e]);
        std::sort(chain.begin(), chain.end());
        bool ok = true;
        for (std::size_t t = 1; t < chain.size(); ++t) ok = ok && chain[t - 1].second <= chain[t].first;
        if (ok) best = std::max(best, chain_score(a, b, chain, w));
    }
    return best;
}

}  // namespace

TEST_CASE("canonical forest") {
    Rng rng(81);
    for (int it = 0; it < 60; ++it) {
        Text a = rng.text(rng.uniform(1, 21), 3), b = rng.text(rng.uniform(0, 14), 3);
        CanonicalForest f(a, b);
        const int m = static_cast<int>(a.size());
        CHECK(f.levels() == std::bit_width(static_cast<unsigned>(m)));
        for (int q = 0; q < m; ++q) CHECK(f.node(0, q) == direct(a, b, q, q + 1));
        for (int l = 1; l < f.levels(); ++l) {
            CHECK(f.nodes(l) == m >> l);
            for (int q = 0; q < f.nodes(l); ++q) {
                CHECK(f.node(l, q) == subperm_matmul(f.node(l - 1, 2 * q), f.node(l - 1, 2 * q + 1)));
                CHECK(f.node(l, q) == direct(a, b, q << l, (q + 1) << l));
            }
        }
        int i = rng.uniform(0, m), j = rng.uniform(i, m);
        int covered = i;
        for (auto [st, s] : CanonicalForest::decompose(i, j)) {
            CHECK(st == covered);
            CHECK(st % s == 0);
            covered += s;
        }
        CHECK(covered == j);
        CHECK(f.substring(i, j) == direct(a, b, i, j));
    }
    CHECK(CanonicalForest(encode("abcde"), encode("ab"), 2).levels() == 2);
    CHECK_THROWS_AS(CanonicalForest(encode("abcde"), encode("ab")).canonical(4, 2), Error);
}

TEST_CASE("window-substring matrices") {
    Rng rng(82);
    for (int it = 0; it < 40; ++it) {
        Text a = rng.text(rng.uniform(1, 16), 3), b = rng.text(rng.uniform(0, 16), 3);
        const int m = static_cast<int>(a.size());
        for (int w = 1; w <= m; ++w) {
            auto ws = window_substring(a, b, w);
            REQUIRE(static_cast<int>(ws.size()) == m - w + 1);
            for (int i = 0; i + w <= m; ++i) CHECK(ws[i] == direct(a, b, i, i + w));
        }
    }
    Text a = encode("baabcbca"), b = encode("baabcabcabaca");
    CHECK(window_substring(a, b, 8).front() == block(seaweed_build(a, b), Block::df));
    auto ones = window_substring(a, b, 1);
    CanonicalForest f(a, b);
    for (int q = 0; q < 8; ++q) CHECK(ones[q] == f.node(0, q));
    CHECK_THROWS_AS(window_substring(a, b, 0), Error);
    CHECK_THROWS_AS(window_substring(a, b, 9), Error);
}

TEST_CASE("window-window grid") {
    Rng rng(83);
    for (int it = 0; it < 60; ++it) {
        Text a = rng.text(rng.uniform(1, 14), 3), b = rng.text(rng.uniform(1, 14), 3);
        const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
        int w = rng.uniform(0, std::min(m, n));
        auto g = window_window(a, b, w);
        REQUIRE(static_cast<int>(g.size()) == m - w + 1);
        for (int i = 0; i + w <= m; ++i) {
            REQUIRE(static_cast<int>(g[i].size()) == n - w + 1);
            for (int j = 0; j + w <= n; ++j) CHECK(g[i][j] == oracle::lcs(oracle::sub(a, i, i + w), oracle::sub(b, j, j + w)));
        }
    }
    Text s = encode("acgtacgtta");
    auto same = window_window(s, s, 4);
    for (std::size_t i = 0; i < same.size(); ++i) CHECK(same[i][i] == 4);
    for (const auto& row : window_window(encode("aaaa"), encode("bbbbb"), 3))
        for (int x : row) CHECK(x == 0);
    CHECK_THROWS_AS(window_window(s, encode("ab"), 3), Error);
}

TEST_CASE("quasi-local matrices") {
    Rng rng(84);
    for (int it = 0; it < 80; ++it) {
        Text a = rng.text(rng.uniform(1, 16), 3), b = rng.text(rng.uniform(0, 16), 3);
        const int m = static_cast<int>(a.size());
        std::vector<std::pair<int, int>> subs;
        for (int k = rng.uniform(1, 12); k > 0; --k) {
            int i = rng.uniform(0, m - 1);
            subs.emplace_back(i, rng.uniform(i + 1, m));
        }
        auto got = quasi_local(a, b, subs);
        REQUIRE(got.size() == subs.size());
        for (std::size_t k = 0; k < subs.size(); ++k) CHECK(got[k] == direct(a, b, subs[k].first, subs[k].second));

        int w = rng.uniform(1, m);
        std::vector<std::pair<int, int>> windows;
        for (int i = 0; i + w <= m; ++i) windows.emplace_back(i, i + w);
        CHECK(quasi_local(a, b, windows) == window_substring(a, b, w));
    }
    Text a = encode("baabcbca"), b = encode("baabcabcabaca");
    CHECK(quasi_local(a, b, {{0, 8}}).front() == block(seaweed_build(a, b), Block::df));
    CHECK_THROWS_AS(quasi_local(a, b, {{3, 3}}), Error);
    CHECK_THROWS_AS(quasi_local(a, b, {{2, 9}}), Error);
}

TEST_CASE("spliced alignment") {
    const std::vector<Weights> weights = {preset("lcs"), preset("indel"), preset("levenshtein"),
                                          Weights{Rational(2), Rational(-1), Rational(-3, 2)}};

    Text a = encode("xxacgxxxttgaxx"), b = encode("acgttga");
    auto two = spliced_alignment(a, b, {{2, 5}, {8, 12}, {0, 3}, {4, 10}}, preset("lcs"));
    CHECK(two.score == Rational(7));
    CHECK(two.chain == std::vector<std::pair<int, int>>{{2, 5}, {8, 12}});

    Rng rng(85);
    for (int it = 0; it < 300; ++it) {
        Text x = rng.text(rng.uniform(1, 12), 3), y = rng.text(rng.uniform(0, 12), 3);
        const int m = static_cast<int>(x.size());
        const Weights& w = weights[static_cast<std::size_t>(it) % weights.size()];
        std::vector<std::pair<int, int>> exons;
        for (int k = rng.uniform(1, 6); k > 0; --k) {
            int i = rng.uniform(0, m - 1);
            exons.emplace_back(i, rng.uniform(i + 1, std::min(m, i + 6)));
        }
        INFO("a=" << decode(x) << " b=" << decode(y) << " w#" << it % weights.size());
        auto r = spliced_alignment(x, y, exons, w);
        CHECK(r.score == best_chain(x, y, exons, w));
        for (std::size_t t = 1; t < r.chain.size(); ++t) CHECK(r.chain[t - 1].second <= r.chain[t].first);
        for (const auto& e : r.chain) CHECK(std::find(exons.begin(), exons.end(), e) != exons.end());
        CHECK(chain_score(x, y, r.chain, w) == r.score);

        auto more = exons;
        int i = rng.uniform(0, m - 1);
        more.emplace_back(i, rng.uniform(i + 1, m));
        CHECK(spliced_alignment(x, y, more, w).score >= r.score);

        auto whole = spliced_alignment(x, y, {{0, m}}, w);
        CHECK(whole.score == std::max(alignment_score(x, y, w), w.gap * Rational(static_cast<long long>(y.size()))));
    }
    CHECK_THROWS_AS(spliced_alignment(a, b, {{3, 3}}, preset("lcs")), Error);
}
