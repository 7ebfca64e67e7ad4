#include "slcs/applications.hpp"
#include "slcs/compressed.hpp"
#include "slcs/periodic.hpp"
#include "slcs/permutation.hpp"
#include "slcs/quasilocal.hpp"
#include "slcs/semilocal.hpp"
#include "slcs/weighted.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace slcs;
using nlohmann::json;

namespace {

struct Options {
    bool literal = false;
    std::string format = "tsv";
    std::string preset = "lcs";
    std::string weights;
};

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    return in;
}

// An existing regular file supplies its first line; anything else is the string itself.
Text input(const std::string& arg, const Options& o) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        auto in = open(arg);
        std::string line;
        std::getline(in, line);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return encode(line, o.literal);
    }
    return encode(arg, o.literal);
}

Weights weights(const Options& o) {
    if (o.weights.empty()) return preset(o.preset);
    std::vector<Rational> v;
    std::stringstream ss(o.weights);
    std::string part;
    while (std::getline(ss, part, ',')) v.push_back(parse_rational(part));
    if (v.size() != 3) throw Error("--weights expects match,mismatch,gap");
    Weights w{v[0], v[1], v[2]};
    w.validate();
    return w;
}

json number(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return to_string(r);
}

json number(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

std::vector<std::pair<int, int>> read_pairs(const std::string& path) {
    auto in = open(path);
    std::vector<std::pair<int, int>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
        std::istringstream ls(line);
        int i, j;
        std::string rest;
        if (!(ls >> i >> j) || (ls >> rest)) throw Error(path + ":" + std::to_string(lineno) + ": expected 'i j'");
        out.emplace_back(i, j);
    }
    return out;
}

ScoreKind kind_of(const std::string& s) {
    if (s == "string-substring") return ScoreKind::string_substring;
    if (s == "prefix-suffix") return ScoreKind::prefix_suffix;
    if (s == "suffix-prefix") return ScoreKind::suffix_prefix;
    if (s == "substring-string") return ScoreKind::substring_string;
    throw Error("unknown score kind: " + s);
}

void print_windows(const std::vector<Match>& ws, const Options& o) {
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& w : ws) arr.push_back({{"start", w.start}, {"end", w.end}, {"score", number(w.score)}});
        std::cout << json{{"windows", arr}}.dump() << '\n';
        return;
    }
    for (const auto& w : ws) std::cout << w.start << '\t' << w.end << '\t' << w.score << '\n';
}

void print_slp_windows(const std::vector<SlpMatch>& ws, const Options& o) {
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& w : ws)
            arr.push_back({{"start", number(w.start)}, {"end", number(w.end)}, {"score", number(w.score)}});
        std::cout << json{{"windows", arr}}.dump() << '\n';
        return;
    }
    for (const auto& w : ws) std::cout << w.start.get_str() << '\t' << w.end.get_str() << '\t' << w.score << '\n';
}

void print_count(const mpz_class& c, const Options& o) {
    if (o.format == "json") std::cout << json{{"count", number(c)}}.dump() << '\n';
    else std::cout << c.get_str() << '\n';
}

void print_intervals(const std::vector<std::pair<int, int>>& iv, const char* key, const json& value, const Options& o) {
    if (o.format == "json") {
        json arr = json::array();
        for (auto [l, r] : iv) arr.push_back({l, r});
        std::cout << json{{key, value}, {"intervals", arr}}.dump() << '\n';
        return;
    }
    std::cout << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    for (auto [l, r] : iv) std::cout << l << '\t' << r << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-local string comparison"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--literal", o.literal, "Treat '?' and '$' as ordinary characters");
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"tsv", "json"}));

    auto add_weights = [&](CLI::App* sub) {
        auto* p = sub->add_option("--preset", o.preset, "Weight preset: lcs, indel, levenshtein, dna");
        auto* w = sub->add_option("--weights", o.weights, "Explicit weights match,mismatch,gap");
        p->excludes(w);
    };

    std::string a, b, extra;
    int number_arg = -1;
    bool count = false, matrix = false;
    std::string mode = "minimal", threshold;
    long long window = -1;
    int thick = -1;

    auto* lcs = app.add_subcommand("lcs", "LCS length of two strings");
    lcs->add_option("a", a)->required();
    lcs->add_option("b", b)->required();

    auto* semi = app.add_subcommand("semilocal", "Batch semi-local queries: lines 'kind i j'");
    semi->add_option("a", a)->required();
    semi->add_option("b", b)->required();
    semi->add_option("queries", extra)->required()->check(CLI::ExistingFile);
    semi->add_flag("--matrix", matrix, "Print the seaweed matrix instead");

    auto* cyc = app.add_subcommand("cyclic", "Highest LCS against a cyclic shift of b");
    cyc->add_option("a", a)->required();
    cyc->add_option("b", b)->required();

    auto* lrs = app.add_subcommand("lrs", "Longest repeating subsequence");
    lrs->add_option("a", a)->required();

    auto* lisc = app.add_subcommand("lis", "Longest increasing subsequence");
    lisc->add_option("a", a)->required();

    auto* match = app.add_subcommand("match", "Approximate matching of pattern p in text t");
    match->add_option("p", a)->required();
    match->add_option("t", b)->required();
    match->add_option("--mode", mode, "complete, threshold, local, local-fixed")
        ->check(CLI::IsMember({"complete", "threshold", "local", "local-fixed"}));
    match->add_option("--threshold", threshold, "Score threshold (rational)");
    match->add_option("--window", window, "Window length");
    std::string filter = "all";
    match->add_option("--filter", filter, "Threshold filter")->check(CLI::IsMember({"all", "minimal", "fixed", "unique"}));
    add_weights(match);
    mode = "";

    auto* tandem = app.add_subcommand("tandem", "Alignment against a periodic string");
    tandem->add_option("a", a)->required();
    tandem->add_option("u", b)->required();
    tandem->add_option("--repeats", number_arg, "LCS against u^k instead of the best cyclic window");
    add_weights(tandem);

    auto* perm = app.add_subcommand("perm-semilocal", "Seaweed matrix of two distinct-character strings");
    perm->add_option("a", a)->required();
    perm->add_option("b", b)->required();

    auto* clique = app.add_subcommand("clique", "Maximum clique of a circle graph given as intervals");
    clique->add_option("intervals", extra)->required()->check(CLI::ExistingFile);
    clique->add_option("--thickness", thick, "Use the thickness-bounded algorithm with this bound");

    auto* slp_sub = app.add_subcommand("slp-subseq", "Subsequence windows in a compressed text");
    slp_sub->add_option("slp", extra)->required()->check(CLI::ExistingFile);
    slp_sub->add_option("p", a)->required();
    slp_sub->add_option("--mode", mode, "global, minimal, fixed, bounded")
        ->check(CLI::IsMember({"global", "minimal", "fixed", "bounded"}));
    slp_sub->add_option("--window", window, "Window length");
    slp_sub->add_flag("--count", count, "Print the number of windows only");

    auto* slp_lcs = app.add_subcommand("slp-lcs", "LCS of a compressed text and a pattern");
    slp_lcs->add_option("slp", extra)->required()->check(CLI::ExistingFile);
    slp_lcs->add_option("p", a)->required();

    auto* slp_match = app.add_subcommand("slp-match", "Threshold matching in a compressed text");
    slp_match->add_option("slp", extra)->required()->check(CLI::ExistingFile);
    slp_match->add_option("p", a)->required();
    slp_match->add_option("--threshold", threshold, "Score threshold (rational)")->required();
    slp_match->add_flag("--count", count, "Print the number of windows only");
    add_weights(slp_match);

    auto* plot = app.add_subcommand("plot", "Window-window LCS grid as TSV");
    plot->add_option("a", a)->required();
    plot->add_option("b", b)->required();
    plot->add_option("--window", window, "Window length")->required();

    auto* spliced = app.add_subcommand("spliced", "Best exon chain of a against b");
    spliced->add_option("a", a)->required();
    spliced->add_option("b", b)->required();
    spliced->add_option("exons", extra)->required()->check(CLI::ExistingFile);
    add_weights(spliced);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (lcs->parsed()) {
            ScoreOracle so(input(a, o), input(b, o));
            std::cout << so.score(ScoreKind::string_substring, 0, static_cast<int>(so.b().size())) << '\n';
        } else if (semi->parsed()) {
            ScoreOracle so(input(a, o), input(b, o));
            if (matrix) {
                write_seaweed(std::cout, so.seaweed());
                return 0;
            }
            auto in = open(extra);
            std::string line;
            int lineno = 0;
            json out = json::array();
            while (std::getline(in, line)) {
                ++lineno;
                std::istringstream ls(line);
                std::string kind, rest;
                int i, j;
                if (!(ls >> kind)) continue;
                if (!(ls >> i >> j) || (ls >> rest)) throw Error(extra + ":" + std::to_string(lineno) + ": expected 'kind i j'");
                int v = so.score(kind_of(kind), i, j);
                if (o.format == "json") out.push_back({{"kind", kind}, {"i", i}, {"j", j}, {"score", v}});
                else std::cout << v << '\n';
            }
            if (o.format == "json") std::cout << out.dump() << '\n';
        } else if (cyc->parsed()) {
            std::cout << cyclic_lcs(input(a, o), input(b, o)) << '\n';
        } else if (lrs->parsed()) {
            std::cout << longest_repeating_subsequence(input(a, o)) << '\n';
        } else if (lisc->parsed()) {
            std::cout << lis(input(a, o)) << '\n';
        } else if (match->parsed()) {
            Text p = input(a, o), t = input(b, o);
            if (mode.empty()) mode = threshold.empty() ? "complete" : "threshold";
            if (mode == "complete") {
                print_windows(complete_matching(p, t, weights(o)), o);
            } else if (mode == "threshold") {
                if (threshold.empty()) throw Error("threshold mode needs --threshold");
                Filter f = filter == "minimal" ? Filter::minimal
                           : filter == "fixed" ? Filter::fixed
                           : filter == "unique" ? Filter::unique_starts
                                                : Filter::all;
                if (f == Filter::fixed && window < 0) throw Error("fixed filter needs --window");
                print_windows(threshold_matching(p, t, weights(o), parse_rational(threshold), f,
                                                 static_cast<int>(std::max<long long>(window, 0)))
                                  .windows,
                              o);
            } else {
                if (mode == "local-fixed" && window < 0) throw Error("local-fixed mode needs --window");
                auto r = local_subseq(p, t, mode == "local" ? LocalMode::minimal : LocalMode::fixed,
                                      static_cast<int>(std::max<long long>(window, 0)));
                print_windows(r.windows, o);
            }
        } else if (tandem->parsed()) {
            Text x = input(a, o), u = input(b, o);
            if (number_arg >= 0) {
                std::cout << tandem_lcs(x, u, number_arg) << '\n';
            } else {
                auto r = tandem_cyclic(x, u, weights(o));
                if (o.format == "json")
                    std::cout << json{{"k", r.k}, {"offset", r.offset}, {"score", number(r.score)}}.dump() << '\n';
                else std::cout << r.k << '\t' << r.offset << '\t' << r.score << '\n';
            }
        } else if (perm->parsed()) {
            write_seaweed(std::cout, semilocal_distinct(input(a, o), input(b, o)));
        } else if (clique->parsed()) {
            auto in = open(extra);
            IntervalModel model = IntervalModel::read(in);
            Clique c = thick >= 0 ? max_clique_circle_thick(model, thick) : max_clique_circle(model);
            print_intervals(c.intervals, "size", c.size, o);
        } else if (slp_sub->parsed()) {
            auto in = open(extra);
            Slp t = Slp::read(in);
            Text p = input(a, o);
            if (mode.empty()) mode = "minimal";
            if (mode == "global") {
                std::cout << global_subseq(t, p) << '\n';
            } else {
                SlpMode m = mode == "fixed" ? SlpMode::fixed : mode == "bounded" ? SlpMode::bounded : SlpMode::minimal;
                if (m != SlpMode::minimal && window < 0) throw Error(mode + " mode needs --window");
                mpz_class w(static_cast<long>(std::max<long long>(window, 0)));
                if (count) print_count(local_subseq_slp_count(t, p, m, w), o);
                else print_slp_windows(local_subseq_slp(t, p, m, w), o);
            }
        } else if (slp_lcs->parsed()) {
            auto in = open(extra);
            std::cout << three_way_semilocal(Slp::read(in), input(a, o)).lcs() << '\n';
        } else if (slp_match->parsed()) {
            auto in = open(extra);
            Slp t = Slp::read(in);
            Text p = input(a, o);
            Rational h = parse_rational(threshold);
            if (count) print_count(threshold_matching_slp_count(t, p, weights(o), h), o);
            else print_slp_windows(threshold_matching_slp(t, p, weights(o), h), o);
        } else if (plot->parsed()) {
            Text x = input(a, o), y = input(b, o);
            if (window < 0 || window > std::numeric_limits<int>::max()) throw Error("window length out of range");
            const int w = static_cast<int>(window);
            auto grid = window_window(x, y, w);
            std::cout << w << '\t' << x.size() << '\t' << y.size() << '\n';
            for (const auto& row : grid) {
                for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "\t" : "") << row[j];
                std::cout << '\n';
            }
        } else if (spliced->parsed()) {
            auto r = spliced_alignment(input(a, o), input(b, o), read_pairs(extra), weights(o));
            print_intervals(r.chain, "score", number(r.score), o);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
