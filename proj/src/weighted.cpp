#include "slcs/weighted.hpp"
#include "slcs/minplus.hpp"

#include <algorithm>
#include <limits>

namespace slcs {

void Weights::validate() const {
    if (!(mismatch < match)) throw Error("weights: mismatch must be below match");
    if (gap * 2 > mismatch) throw Error("weights: twice the gap must not exceed mismatch");
}

Weights preset(std::string_view name) {
    if (name == "lcs") return {Rational(1), Rational(0), Rational(0)};
    if (name == "indel") return {Rational(0), Rational(-2), Rational(-1)};
    if (name == "levenshtein") return {Rational(0), Rational(-1), Rational(-1)};
    if (name == "dna") return {Rational(1), Rational(0), Rational(-1, 2)};
    throw Error("unknown weight preset: " + std::string(name));
}

Normalized normalize(const Weights& w) {
    w.validate();
    Normalized out;
    out.scale = w.match - w.gap * 2;
    if (out.scale <= 0) throw Error("weights: degenerate normalisation");
    out.mismatch = (w.mismatch - w.gap * 2) / out.scale;
    out.mu = out.mismatch.numerator();
    out.nu = out.mismatch.denominator();
    return out;
}

Text blow_up(const Text& s, long long mu, long long nu) {
    if (mu < 0 || nu <= 0 || mu >= nu) throw Error("blow-up: need 0 <= mu < nu");
    Text out;
    out.reserve(s.size() * static_cast<std::size_t>(nu));
    for (Symbol c : s) {
        out.insert(out.end(), static_cast<std::size_t>(mu), DOLLAR);
        out.insert(out.end(), static_cast<std::size_t>(nu - mu), c);
    }
    return out;
}

namespace {

ScoreOracle blown_oracle(const Text& a, const Text& b, const Normalized& norm) {
    if (norm.nu > 1 && (a.size() + b.size()) * static_cast<std::size_t>(norm.nu) > std::numeric_limits<int>::max() / 2)
        throw Error("blow-up too large");
    Text ab = blow_up(a, norm.mu, norm.nu), bb = blow_up(b, norm.mu, norm.nu);
    return ScoreOracle(std::move(ab), std::move(bb));
}

}  // namespace

WeightedOracle::WeightedOracle(Text a, Text b, Weights w)
    : a_(std::move(a)),
      b_(std::move(b)),
      w_(w),
      norm_(normalize(w_)),
      m_(static_cast<int>(a_.size())),
      n_(static_cast<int>(b_.size())),
      blown_(blown_oracle(a_, b_, norm_)) {}

Rational WeightedOracle::restore(Rational h_star, int total_length) const {
    return h_star * norm_.scale + w_.gap * total_length;
}

Rational WeightedOracle::normalized_score(ScoreKind kind, int i, int j) const {
    const int nu = static_cast<int>(norm_.nu);
    return Rational(blown_.score(kind, nu * i, nu * j), nu);
}

Rational WeightedOracle::score(ScoreKind kind, int i, int j) const {
    Rational h = normalized_score(kind, i, j);
    switch (kind) {
    case ScoreKind::string_substring: return restore(h, m_ + j - i);
    case ScoreKind::prefix_suffix: return restore(h, i + n_ - j);
    case ScoreKind::suffix_prefix: return restore(h, m_ - i + j);
    case ScoreKind::substring_string: return restore(h, j - i + n_);
    }
    return h;
}

Rational WeightedOracle::extended(int i, int j) const {
    if (i < 0 || i > n_ || j < 0 || j > n_) throw Error("window out of range");
    const int nu = static_cast<int>(norm_.nu);
    return restore(Rational(blown_.h(nu * i, nu * j), nu), m_ + j - i);
}

std::vector<Rational> WeightedOracle::row(int i) const {
    if (i < 0 || i > n_) throw Error("window out of range");
    const int nu = static_cast<int>(norm_.nu), mb = nu * m_;
    auto vals = batch(blown_.seaweed().perm, blown_.counter(), Line::row, nu * i + mb, nu * i, nu * (n_ - i));
    std::vector<Rational> out;
    for (int j = i; j <= n_; ++j) {
        int h = nu * (j - i) - vals[static_cast<std::size_t>(nu * (j - i))];
        out.push_back(restore(Rational(h, nu), m_ + j - i));
    }
    return out;
}

std::vector<Rational> WeightedOracle::diagonal(int len) const {
    if (len < 0 || len > n_) throw Error("window length out of range");
    const int nu = static_cast<int>(norm_.nu), mb = nu * m_;
    auto vals = batch(blown_.seaweed().perm, blown_.counter(), Line::diagonal, mb, nu * len, nu * (n_ - len));
    std::vector<Rational> out;
    for (int i = 0; i + len <= n_; ++i) {
        int h = nu * len - vals[static_cast<std::size_t>(nu * i)];
        out.push_back(restore(Rational(h, nu), m_ + len));
    }
    return out;
}

Rational alignment_score(const Text& a, const Text& b, const Weights& w) {
    WeightedOracle o(a, b, w);
    return o.score(ScoreKind::string_substring, 0, o.n());
}

Rational edit_distance(const Text& a, const Text& b, const Weights& w) { return -alignment_score(a, b, w); }

namespace {

std::vector<int> row_maxima(const WeightedOracle& o) {
    const int n = o.n();
    // A convex penalty below the diagonal keeps the matrix anti-Monge and its row maxima at j >= i.
    Rational slope = o.weights().match - o.weights().gap;
    Rational penalty = (slope < 0 ? -slope : slope) + 1;
    return smawk_row_minima(n + 1, n + 1, [&](int i, int j) {
        Rational v = o.extended(i, j);
        if (j < i) v -= penalty * (i - j);
        return -v;
    });
}

}  // namespace

std::vector<Match> complete_matching(const Text& p, const Text& t, const Weights& w) {
    WeightedOracle o(p, t, w);
    auto arg = row_maxima(o);
    std::vector<Match> out;
    for (int i = 0; i <= o.n(); ++i) {
        if (arg[i] < i) throw Error("complete matching: row maximum below the diagonal");
        out.push_back({i, arg[i], o.extended(i, arg[i])});
    }
    return out;
}

namespace {

// Keeps, among first hits per start, those not containing a later start's first hit.
std::vector<Match> minimal_of(const std::vector<Match>& firsts) {
    std::vector<Match> out;
    int best_end = std::numeric_limits<int>::max();
    for (auto it = firsts.rbegin(); it != firsts.rend(); ++it) {
        if (it->end < best_end) out.push_back(*it);
        best_end = std::min(best_end, it->end);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

MatchReport threshold_matching(const Text& p, const Text& t, const Weights& w, Rational h, Filter filter,
                               int window_length) {
    WeightedOracle o(p, t, w);
    const int n = o.n();
    MatchReport rep;
    rep.filter = filter;
    if (filter == Filter::fixed) {
        if (window_length < 0 || window_length > n) throw Error("window length out of range");
        auto d = o.diagonal(window_length);
        for (int i = 0; i + window_length <= n; ++i)
            if (d[i] >= h) rep.windows.push_back({i, i + window_length, d[i]});
        return rep;
    }
    auto arg = row_maxima(o);
    std::vector<Match> firsts;
    for (int i = 0; i <= n; ++i) {
        if (o.extended(i, arg[i]) < h) continue;
        auto r = o.row(i);
        bool first = true;
        for (int j = i; j <= n; ++j) {
            if (r[j - i] < h) continue;
            if (first) firsts.push_back({i, j, r[j - i]});
            if (filter == Filter::all) rep.windows.push_back({i, j, r[j - i]});
            first = false;
            if (filter != Filter::all) break;
        }
    }
    if (filter == Filter::unique_starts) rep.windows = firsts;
    if (filter == Filter::minimal) rep.windows = minimal_of(firsts);
    return rep;
}

MatchReport local_subseq(const ScoreOracle& o, LocalMode mode, int window_length) {
    const int m = static_cast<int>(o.a().size()), n = static_cast<int>(o.b().size());
    const auto& perm = o.seaweed().perm;
    MatchReport rep;
    if (mode == LocalMode::fixed) {
        rep.filter = Filter::fixed;
        if (window_length < 0 || window_length > n) throw Error("window length out of range");
        auto d = batch(perm, o.counter(), Line::diagonal, m, window_length, n - window_length);
        for (int i = 0; i + window_length <= n; ++i)
            if (window_length - d[i] == m) rep.windows.push_back({i, i + window_length, Rational(m)});
        return rep;
    }
    rep.filter = Filter::minimal;
    StepCursor cur(perm);
    std::vector<Match> firsts;
    int j = 0;
    for (int i = 0; i <= n; ++i) {
        j = std::max(j, i);
        while (j <= n && j - i - cur.at(i + m, j) < m) ++j;
        if (j > n) break;
        firsts.push_back({i, j, Rational(m)});
    }
    rep.windows = minimal_of(firsts);
    return rep;
}

MatchReport local_subseq(const Text& p, const Text& t, LocalMode mode, int window_length) {
    return local_subseq(ScoreOracle(p, t), mode, window_length);
}

}  // namespace slcs
