#include "slcs/compressed.hpp"
#include "slcs/dominance.hpp"
#include "slcs/minplus.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace slcs {

// ---------------------------------------------------------------- SLP model

int Slp::add_terminal(Symbol c) {
    stmts_.push_back({c, -1, -1});
    len_.emplace_back(1);
    return size() - 1;
}

int Slp::add_concat(int i, int j) {
    const int k = size();
    if (i < 0 || j < 0 || i >= k || j >= k) throw Error("slp: forward reference in statement " + std::to_string(k + 1));
    stmts_.push_back({0, i, j});
    len_.push_back(len_[i] + len_[j]);
    return k;
}

Slp Slp::parse(std::string_view text) {
    Slp slp;
    int lineno = 0;
    std::size_t at = 0;
    while (at <= text.size()) {
        std::size_t nl = text.find('\n', at);
        if (nl == std::string_view::npos) nl = text.size();
        std::string line(text.substr(at, nl - at));
        at = nl + 1;
        ++lineno;
        auto bad = [&](const std::string& why) { return Error("slp line " + std::to_string(lineno) + ": " + why); };
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long long k;
        char eq;
        if (!(ls >> k >> eq) || eq != '=') throw bad("expected 'k = ...'");
        if (k != slp.size() + 1) throw bad("statements must be numbered 1, 2, ...");
        ls >> std::ws;
        if (ls.peek() == '\'') {
            ls.get();
            int c = ls.get();
            if (c == EOF || ls.get() != '\'') throw bad("bad terminal");
            slp.add_terminal(static_cast<unsigned char>(c));
        } else {
            long long i, j;
            if (!(ls >> i >> j)) throw bad("expected two statement numbers");
            if (i < 1 || j < 1 || i >= k || j >= k) throw bad("forward reference");
            slp.add_concat(static_cast<int>(i - 1), static_cast<int>(j - 1));
        }
        std::string rest;
        if (ls >> rest) throw bad("trailing input");
    }
    if (slp.empty()) throw Error("slp: no statements");
    return slp;
}

Slp Slp::read(std::istream& is) {
    std::string all((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return parse(all);
}

std::string Slp::str() const {
    std::ostringstream os;
    for (int k = 0; k < size(); ++k) {
        os << k + 1 << " = ";
        if (stmts_[k].is_terminal()) os << '\'' << static_cast<char>(stmts_[k].terminal) << '\'';
        else os << stmts_[k].left + 1 << ' ' << stmts_[k].right + 1;
        os << '\n';
    }
    return os.str();
}

Text slp_expand(const Slp& slp, std::size_t limit) {
    if (slp.empty()) return {};
    if (slp.length() > mpz_class(std::to_string(limit))) throw Error("slp: expansion exceeds limit");
    Text out;
    std::vector<int> stack{slp.size() - 1};
    while (!stack.empty()) {
        int k = stack.back();
        stack.pop_back();
        const auto& s = slp.at(k);
        if (s.is_terminal()) {
            out.push_back(s.terminal);
        } else {
            stack.push_back(s.right);
            stack.push_back(s.left);
        }
    }
    return out;
}

bool is_lz78_form(const Slp& slp) {
    const int n = slp.size();
    int k = 0;
    while (k < n && slp.at(k).is_terminal()) ++k;
    const int first_end = k;
    while (k < n && !slp.at(k).is_terminal() && slp.at(k).right < first_end) ++k;
    const int second_end = k;
    for (; k < n; ++k) {
        const auto& s = slp.at(k);
        if (s.is_terminal() || s.right >= second_end) return false;
        if (k > second_end && s.left != k - 1) return false;
        if (k == second_end && s.left >= second_end) return false;
    }
    return true;
}

Slp lz78_slp(const Text& t) {
    if (t.empty()) throw Error("slp: empty text");
    // phrase = (prefix phrase, character); phrase 0 is empty
    std::vector<std::pair<int, Symbol>> phrase{{-1, 0}};
    std::unordered_map<long long, int> child;
    auto key = [](int parent, Symbol c) { return static_cast<long long>(parent) << 32 | static_cast<std::uint32_t>(c); };
    std::vector<int> parse;
    int cur = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto it = child.find(key(cur, t[i]));
        if (it != child.end() && i + 1 < t.size()) {
            cur = it->second;
            continue;
        }
        if (it != child.end()) {
            parse.push_back(it->second);
        } else {
            phrase.emplace_back(cur, t[i]);
            child[key(cur, t[i])] = static_cast<int>(phrase.size()) - 1;
            parse.push_back(static_cast<int>(phrase.size()) - 1);
        }
        cur = 0;
    }
    Slp slp;
    std::unordered_map<Symbol, int> term;
    for (Symbol c : t)
        if (!term.count(c)) term[c] = slp.add_terminal(c);
    std::vector<int> stmt(phrase.size(), -1);
    for (std::size_t q = 1; q < phrase.size(); ++q) {
        auto [parent, c] = phrase[q];
        stmt[q] = parent == 0 ? term[c] : slp.add_concat(stmt[parent], term[c]);
    }
    int acc = stmt[parse[0]];
    for (std::size_t q = 1; q < parse.size(); ++q) acc = slp.add_concat(acc, stmt[parse[q]]);
    return slp;
}

// ------------------------------------------------- global subsequence check

int global_subseq(const Slp& t, const Text& p) {
    if (t.empty()) return 0;
    const long long m = static_cast<long long>(p.size());
    std::unordered_map<long long, int> memo;
    auto key = [&](int k, long long s) { return static_cast<long long>(k) * (m + 1) + s; };
    struct Frame {
        int k;
        long long s;
        int stage, a;
    };
    std::vector<Frame> stack{{t.size() - 1, 0, 0, 0}};
    int ret = 0;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& st = t.at(f.k);
        if (f.stage == 0) {
            if (f.s == m) {
                ret = 0;
                stack.pop_back();
                continue;
            }
            if (st.is_terminal()) {
                ret = matches(p[f.s], st.terminal) ? 1 : 0;
                stack.pop_back();
                continue;
            }
            if (auto it = memo.find(key(f.k, f.s)); it != memo.end()) {
                ret = it->second;
                stack.pop_back();
                continue;
            }
            f.stage = 1;
            stack.push_back({st.left, f.s, 0, 0});
        } else if (f.stage == 1) {
            f.a = ret;
            f.stage = 2;
            stack.push_back({st.right, f.s + ret, 0, 0});
        } else {
            ret += f.a;
            memo[key(f.k, f.s)] = ret;
            stack.pop_back();
        }
    }
    return ret;
}

// -------------------------------------------------------- three-way engine

namespace {

struct Node {
    ThreeWay tw;
    std::vector<mpz_class> pos;
};

// Drops text characters whose left and right boundaries both carry no nonzero.
Node compact(const ThreeWay& tw, std::vector<mpz_class> pos) {
    const int m = tw.m, n = tw.n;
    std::vector<int> idx(static_cast<std::size_t>(m), -1);
    Node out;
    int kept = 0;
    for (int l = 0; l < m; ++l)
        if (tw.perm.col(m - 1 - l) != ABSENT || tw.perm.row(m + n - 1 - l) != ABSENT) {
            idx[l] = kept++;
            out.pos.push_back(std::move(pos[l]));
        }
    out.tw = ThreeWay{kept, n, PermutationMatrix(kept + n)};
    for (auto [r, c] : tw.perm.pairs()) {
        int nr = r < m ? kept - 1 - idx[m - 1 - r] : r - m + kept;
        int nc = c < n ? c : kept + n - 1 - idx[m + n - 1 - c];
        out.tw.perm.set(nr, nc);
    }
    return out;
}

// A cross-matrix nonzero: a seaweed from the left of text position a (or from
// the top when a is minus infinity) to the right of position b (or the bottom).
struct CrossPoint {
    bool a_inf = false, b_inf = false;
    mpz_class a, b;
};

class Engine {
public:
    Engine(const Slp& slp, Text pattern, long long mu, long long nu)
        : slp_(slp), p_(std::move(pattern)), mu_(mu), nu_(nu), nodes_(static_cast<std::size_t>(slp.size())) {
        if (slp.empty()) throw Error("slp: no statements");
    }

    long long nu() const { return nu_; }
    int pattern_length() const { return static_cast<int>(p_.size()); }
    const Node& node(int k) const { return nodes_[k]; }

    // leaf(k) for terminals; cross(k, points, x) for concatenations.
    template <class Leaf, class Cross>
    void run(Leaf&& leaf, Cross&& cross) {
        const int n = static_cast<int>(p_.size());
        for (int k = 0; k < slp_.size(); ++k) {
            const auto& st = slp_.at(k);
            if (st.is_terminal()) {
                Text s = nu_ == 1 ? Text{st.terminal} : blow_up(Text{st.terminal}, mu_, nu_);
                std::vector<mpz_class> pos(s.size());
                for (std::size_t q = 0; q < s.size(); ++q) pos[q] = static_cast<unsigned long>(q);
                nodes_[k] = compact(three_way(seaweed_build(s, p_)), std::move(pos));
                leaf(k);
                continue;
            }
            const Node& l = nodes_[st.left];
            const Node& r = nodes_[st.right];
            auto [tw, x] = compose_three_way(l.tw, r.tw);
            const mpz_class shift = slp_.length(st.left) * static_cast<long>(nu_);
            std::vector<CrossPoint> pts;
            const int m1 = l.tw.m, m2 = r.tw.m;
            for (auto [row, col] : x.x.pairs()) {
                CrossPoint cp;
                if (row < m1) cp.a = l.pos[m1 - 1 - row];
                else cp.a_inf = true;
                if (col >= n) cp.b = shift + r.pos[m2 + n - 1 - col];
                else cp.b_inf = true;
                pts.push_back(std::move(cp));
            }
            cross(k, pts, x);
            std::vector<mpz_class> pos = l.pos;
            for (const auto& q : r.pos) pos.push_back(shift + q);
            nodes_[k] = compact(tw, std::move(pos));
        }
    }

private:
    const Slp& slp_;
    Text p_;
    long long mu_, nu_;
    std::vector<Node> nodes_;
};

}  // namespace

ThreeWayResult three_way_semilocal(const Slp& t, const Text& p) {
    Engine e(t, p, 0, 1);
    e.run([](int) {}, [](int, const std::vector<CrossPoint>&, const CrossMatrix&) {});
    const Node& root = e.node(t.size() - 1);
    return ThreeWayResult{t.length(), static_cast<int>(p.size()), root.tw, root.pos};
}

int ThreeWayResult::compact_before(const mpz_class& k) const {
    return static_cast<int>(std::lower_bound(position.begin(), position.end(), k) - position.begin());
}

int ThreeWayResult::count(int i, int j) const { return distribution_value(compact.perm, i, j); }

int ThreeWayResult::lcs() const { return m - count(compact.m, m); }

int ThreeWayResult::string_substring(int i, int j) const {
    if (i < 0 || j > m || i > j) throw Error("pattern range out of bounds");
    return j - i - count(i + compact.m, j);
}

int ThreeWayResult::prefix_suffix(const mpz_class& k, int j) const {
    if (k < 0 || k > n || j < 0 || j > m) throw Error("query out of range");
    return m - j - count(j + compact.m, m + compact.m - compact_before(k));
}

int ThreeWayResult::suffix_prefix(const mpz_class& l, int j) const {
    if (l < 0 || l > n || j < 0 || j > m) throw Error("query out of range");
    return j - count(compact.m - compact_before(l), j);
}

std::vector<ThreeWayResult::Nonzero> ThreeWayResult::nonzeros() const {
    const int kc = compact.m;
    std::vector<Nonzero> out;
    for (auto [r, c] : compact.perm.pairs()) {
        Nonzero z;
        z.row = r < kc ? mpz_class(n - 1 - position[kc - 1 - r]) : mpz_class(n + (r - kc));
        z.col = c < m ? mpz_class(c) : mpz_class(n + m - 1 - position[m + kc - 1 - c]);
        out.push_back(std::move(z));
    }
    return out;
}

PermutationMatrix ThreeWayResult::remap(const std::vector<Nonzero>& nz) const {
    const int kc = compact.m;
    auto index_of = [&](const mpz_class& p) {
        int q = compact_before(p);
        if (q >= kc || position[q] != p) throw Error("remap: position carries no nonzero");
        return q;
    };
    PermutationMatrix out(kc + m);
    for (const auto& z : nz) {
        int r = z.row >= n ? kc + static_cast<int>(mpz_class(z.row - n).get_si()) : kc - 1 - index_of(n - 1 - z.row);
        int c = z.col < m ? static_cast<int>(z.col.get_si()) : m + kc - 1 - index_of(n + m - 1 - z.col);
        out.set(r, c);
    }
    return out;
}

// ------------------------------------------------------- second phase

namespace {

// Per-statement cross windows as [start, end) in statement coordinates,
// expanded into all occurrences of the statement in t.
struct Aggregator {
    const Slp& slp;
    std::vector<mpz_class> count;
    std::vector<std::vector<SlpMatch>> local;  // explicit windows
    // windows [i, i+w) for i in each interval (fixed mode)
    std::vector<std::vector<std::pair<mpz_class, mpz_class>>> runs;
    mpz_class run_width;
    // lattice blocks (threshold mode)
    struct Block {
        mpz_class i0, i1, j0, j1, d;
        bool all = false;
        mpq_class base, gap;
    };
    std::vector<std::vector<Block>> blocks;

    explicit Aggregator(const Slp& s)
        : slp(s),
          count(static_cast<std::size_t>(s.size())),
          local(static_cast<std::size_t>(s.size())),
          runs(static_cast<std::size_t>(s.size())),
          blocks(static_cast<std::size_t>(s.size())) {}

    void add_children(int k) {
        const auto& st = slp.at(k);
        if (!st.is_terminal()) count[k] += count[st.left] + count[st.right];
    }

    template <class Emit>
    void walk(Emit&& emit) const {
        std::vector<std::pair<int, mpz_class>> stack{{slp.size() - 1, 0}};
        while (!stack.empty()) {
            auto [k, off] = std::move(stack.back());
            stack.pop_back();
            if (count[k] == 0) continue;
            for (const auto& w : local[k]) emit(SlpMatch{w.start + off, w.end + off, w.score});
            for (const auto& [lo, hi] : runs[k])
                for (mpz_class i = lo; i <= hi; ++i) emit(SlpMatch{i + off, i + off + run_width, Rational()});
            for (const auto& b : blocks[k])
                for (mpz_class i = b.i0; i <= b.i1; ++i) {
                    mpz_class top = b.all ? b.j1 : mpz_class(std::min<mpz_class>(b.j1, i + b.d));
                    for (mpz_class j = b.j0; j <= top; ++j) {
                        mpq_class s = b.base + mpq_class(j - i) * b.gap;
                        emit(SlpMatch{i + off, j + off, Rational(s.get_num().get_si(), s.get_den().get_si())});
                    }
                }
            const auto& st = slp.at(k);
            if (!st.is_terminal()) {
                stack.emplace_back(st.right, off + slp.length(st.left));
                stack.emplace_back(st.left, off);
            }
        }
    }
};

std::vector<SlpMatch> collect(const Aggregator& agg, const mpz_class& extra, std::size_t limit,
                              const std::vector<SlpMatch>& extra_windows) {
    const mpz_class total = agg.count.back() + extra;
    if (total > mpz_class(std::to_string(limit))) throw Error("output limit exceeded");
    std::vector<SlpMatch> out = extra_windows;
    agg.walk([&](SlpMatch w) { out.push_back(std::move(w)); });
    std::sort(out.begin(), out.end(), [](const SlpMatch& x, const SlpMatch& y) {
        return x.start != y.start ? x.start < y.start : x.end < y.end;
    });
    return out;
}

Rational to_rational(const mpq_class& q) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) throw Error("rational overflow");
    return Rational(q.get_num().get_si(), q.get_den().get_si());
}

mpq_class to_q(const Rational& r) {
    return mpq_class(mpz_class(static_cast<long>(r.numerator())), mpz_class(static_cast<long>(r.denominator())));
}

// Minimal windows, with the pattern non-empty.
void minimal_cross(Aggregator& agg, int k, std::vector<CrossPoint> pts, const mpz_class* bound, int m) {
    std::sort(pts.begin(), pts.end(), [](const CrossPoint& x, const CrossPoint& y) {
        if (x.a_inf != y.a_inf) return x.a_inf;
        return x.a < y.a;
    });
    bool have = false, max_inf = false;
    mpz_class max_b;
    for (const auto& cp : pts) {
        if (!cp.a_inf && have && !max_inf) {
            mpz_class j0 = max_b + 1;
            if ((cp.b_inf || cp.b >= j0) && (!bound || j0 - cp.a <= *bound)) {
                agg.local[k].push_back({cp.a, j0, Rational(m)});
                agg.count[k] += 1;
            }
        }
        have = true;
        if (cp.b_inf) max_inf = true;
        else if (!max_inf && cp.b > max_b) max_b = cp.b;
    }
    if (!have) return;
}

void fixed_cross(Aggregator& agg, int k, const std::vector<CrossPoint>& pts, const mpz_class& split,
                 const mpz_class& len, const mpz_class& w) {
    mpz_class lo = std::max<mpz_class>(0, split + 1 - w), hi = std::min<mpz_class>(split - 1, len - w);
    if (lo > hi) return;
    std::vector<std::pair<mpz_class, mpz_class>> bad;
    for (const auto& cp : pts) {
        mpz_class a = cp.a_inf ? lo : std::max<mpz_class>(lo, cp.a + 1);
        mpz_class b = cp.b_inf ? hi : std::min<mpz_class>(hi, cp.b - w);
        if (a <= b) bad.emplace_back(a, b);
    }
    std::sort(bad.begin(), bad.end());
    mpz_class next = lo;
    for (const auto& [a, b] : bad) {
        if (a > next) {
            agg.runs[k].emplace_back(next, a - 1);
            agg.count[k] += a - next;
        }
        if (b + 1 > next) next = b + 1;
    }
    if (next <= hi) {
        agg.runs[k].emplace_back(next, hi);
        agg.count[k] += hi - next + 1;
    }
}

}  // namespace

std::vector<SlpMatch> local_subseq_slp_impl(const Slp& t, const Text& p, SlpMode mode, const mpz_class& w,
                                            std::size_t limit, mpz_class* count_only) {
    if (t.empty()) throw Error("slp: no statements");
    if (mode != SlpMode::minimal && w < 0) throw Error("window length must be nonnegative");
    const int m = static_cast<int>(p.size());
    const mpz_class n = t.length();
    if (m == 0) {
        // every empty window matches; with a fixed length every window does
        mpz_class len = mode == SlpMode::fixed ? w : mpz_class(0);
        mpz_class cnt = len > n ? mpz_class(0) : mpz_class(n - len + 1);
        if (count_only) {
            *count_only = cnt;
            return {};
        }
        if (cnt > mpz_class(std::to_string(limit))) throw Error("output limit exceeded");
        std::vector<SlpMatch> out;
        for (mpz_class i = 0; i < cnt; ++i) out.push_back({i, i + len, Rational(0)});
        return out;
    }
    Aggregator agg(t);
    agg.run_width = w;
    Engine e(t, p, 0, 1);
    auto leaf = [&](int k) {
        bool hit = m == 1 && matches(p[0], t.at(k).terminal);
        bool keep = mode == SlpMode::fixed ? w == 1 : (mode == SlpMode::minimal || w >= 1);
        if (hit && keep) {
            agg.local[k].push_back({0, 1, Rational(m)});
            agg.count[k] = 1;
        }
    };
    auto cross = [&](int k, const std::vector<CrossPoint>& pts, const CrossMatrix&) {
        const auto& st = t.at(k);
        if (mode == SlpMode::fixed) fixed_cross(agg, k, pts, t.length(st.left), t.length(k), w);
        else minimal_cross(agg, k, pts, mode == SlpMode::bounded ? &w : nullptr, m);
        agg.add_children(k);
    };
    e.run(leaf, cross);
    if (count_only) {
        *count_only = agg.count.back();
        return {};
    }
    auto out = collect(agg, 0, limit, {});
    for (auto& x : out)
        if (mode == SlpMode::fixed) x.score = Rational(m);
    return out;
}

std::vector<SlpMatch> local_subseq_slp(const Slp& t, const Text& p, SlpMode mode, const mpz_class& w,
                                       std::size_t limit) {
    return local_subseq_slp_impl(t, p, mode, w, limit, nullptr);
}

mpz_class local_subseq_slp_count(const Slp& t, const Text& p, SlpMode mode, const mpz_class& w) {
    mpz_class c;
    local_subseq_slp_impl(t, p, mode, w, 0, &c);
    return c;
}

namespace {

mpz_class floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// #{(i,j) in [i0,i1] x [j0,j1] : j - i <= d}
mpz_class lattice_count(const mpz_class& i0, const mpz_class& i1, const mpz_class& j0, const mpz_class& j1,
                        const mpz_class& d) {
    mpz_class total = 0;
    const mpz_class full_from = j1 - d, zero_below = j0 - d;
    mpz_class a = std::max(i0, zero_below), b = std::min<mpz_class>(i1, full_from - 1);
    if (a <= b) {
        mpz_class cnt = b - a + 1;
        total += cnt * (a + b) / 2 + cnt * (d - j0 + 1);
    }
    mpz_class f = std::max(i0, full_from);
    if (f <= i1) total += (i1 - f + 1) * (j1 - j0 + 1);
    return total;
}

}  // namespace

std::vector<SlpMatch> threshold_impl(const Slp& t, const Text& p, const Weights& w, Rational h, std::size_t limit,
                                     mpz_class* count_only) {
    if (t.empty()) throw Error("slp: no statements");
    Normalized norm = normalize(w);
    const int m = static_cast<int>(p.size());
    const mpz_class n = t.length();
    const mpq_class gap = to_q(w.gap), hq = to_q(h), scale = to_q(norm.scale);
    const mpz_class nu(static_cast<long>(norm.nu));

    std::vector<SlpMatch> extra_windows;
    mpz_class extra = 0;
    auto report_extra = [&](const mpz_class& len) {
        mpq_class s = mpq_class(len + m) * gap;
        if (count_only) return;
        if (extra > mpz_class(std::to_string(limit))) throw Error("output limit exceeded");
        for (mpz_class i = 0; i + len <= n; ++i) extra_windows.push_back({i, i + len, to_rational(s)});
    };
    if (m == 0) {
        // score of t[i:j] is (j-i) * gap
        mpz_class top;
        if (gap == 0) top = hq <= 0 ? n : mpz_class(-1);
        else top = std::min<mpz_class>(n, floor_q(-hq / -gap));
        for (mpz_class len = 0; len <= top; ++len) {
            extra += n - len + 1;
            report_extra(len);
        }
        if (count_only) {
            *count_only = extra;
            return {};
        }
        return collect(Aggregator(t), extra, limit, extra_windows);
    }
    if (mpq_class(m) * gap >= hq) {
        extra = n + 1;
        report_extra(0);
    }

    Text pb = blow_up(p, norm.mu, norm.nu);
    const int nt = static_cast<int>(pb.size());
    Aggregator agg(t);
    Engine e(t, pb, norm.mu, norm.nu);
    auto leaf = [&](int k) {
        Rational s = alignment_score(p, Text{t.at(k).terminal}, w);
        if (s >= h) {
            agg.local[k].push_back({0, 1, s});
            agg.count[k] = 1;
        }
    };
    auto cross = [&](int k, const std::vector<CrossPoint>&, const CrossMatrix& x) {
        const auto& st = t.at(k);
        const Node& l = e.node(st.left);
        const Node& r = e.node(st.right);
        const int m1 = l.tw.m, m2 = r.tw.m;
        const mpz_class split = t.length(st.left), len = t.length(k), nl = split * nu;
        // start blocks: i with exactly u retained t' characters before nu*i
        std::vector<std::pair<mpz_class, mpz_class>> rows, cols;
        std::vector<int> row_u, col_v;
        for (int u = 0; u <= m1; ++u) {
            mpz_class lo = u == 0 ? mpz_class(0) : mpz_class(floor_q(mpq_class(l.pos[u - 1], nu)) + 1);
            mpz_class hi = u == m1 ? mpz_class(split - 1) : floor_q(mpq_class(l.pos[u], nu));
            hi = std::min<mpz_class>(hi, split - 1);
            if (lo <= hi) rows.emplace_back(lo, hi), row_u.push_back(u);
        }
        for (int v = 0; v <= m2; ++v) {
            mpz_class lo = v == 0 ? mpz_class(split + 1) : mpz_class(floor_q(mpq_class(nl + r.pos[v - 1], nu)) + 1);
            lo = std::max<mpz_class>(lo, split + 1);
            mpz_class hi = v == m2 ? len : floor_q(mpq_class(nl + r.pos[v], nu));
            if (lo <= hi) cols.emplace_back(lo, hi), col_v.push_back(v);
        }
        if (!rows.empty() && !cols.empty()) {
            DominanceCounter dc(x.x);
            auto base = [&](int a, int b) -> mpq_class {
                int d = dc.query(m1 - row_u[a], m2 + nt - col_v[b]);
                return mpq_class(nt - d, nu) * scale + mpq_class(m) * gap;
            };
            auto corner = [&](int a, int b) -> mpq_class { return base(a, b) + mpq_class(cols[b].first - rows[a].second) * gap; };
            auto arg = smawk_row_minima(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                                        [&](int a, int b) { return mpq_class(-corner(a, b)); });
            for (std::size_t a = 0; a < rows.size(); ++a) {
                if (corner(static_cast<int>(a), arg[a]) < hq) continue;
                for (std::size_t b = 0; b < cols.size(); ++b) {
                    mpq_class c0 = base(static_cast<int>(a), static_cast<int>(b));
                    if (c0 + mpq_class(cols[b].first - rows[a].second) * gap < hq) continue;
                    Aggregator::Block blk{rows[a].first, rows[a].second, cols[b].first, cols[b].second, 0, gap == 0,
                                          c0, gap};
                    if (blk.all) {
                        agg.count[k] += (blk.i1 - blk.i0 + 1) * (blk.j1 - blk.j0 + 1);
                    } else {
                        blk.d = floor_q((c0 - hq) / -gap);
                        agg.count[k] += lattice_count(blk.i0, blk.i1, blk.j0, blk.j1, blk.d);
                    }
                    if (!count_only) agg.blocks[k].push_back(std::move(blk));
                }
            }
        }
        agg.add_children(k);
    };
    e.run(leaf, cross);
    if (count_only) {
        *count_only = agg.count.back() + extra;
        return {};
    }
    return collect(agg, extra, limit, extra_windows);
}

std::vector<SlpMatch> threshold_matching_slp(const Slp& t, const Text& p, const Weights& w, Rational h,
                                             std::size_t limit) {
    return threshold_impl(t, p, w, h, limit, nullptr);
}

mpz_class threshold_matching_slp_count(const Slp& t, const Text& p, const Weights& w, Rational h) {
    mpz_class c;
    threshold_impl(t, p, w, h, 0, &c);
    return c;
}

}  // namespace slcs
