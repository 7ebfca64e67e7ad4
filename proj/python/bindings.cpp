#include "slcs/applications.hpp"
#include "slcs/compressed.hpp"
#include "slcs/periodic.hpp"
#include "slcs/permutation.hpp"
#include "slcs/quasilocal.hpp"
#include "slcs/semilocal.hpp"
#include "slcs/weighted.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

namespace py = pybind11;
using namespace slcs;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.numerator(), r.denominator());
}

py::object big(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

Weights weights(py::object w) {
    if (w.is_none()) return preset("lcs");
    if (py::isinstance<py::str>(w)) return preset(w.cast<std::string>());
    auto t = w.cast<std::vector<py::object>>();
    if (t.size() != 3) throw Error("weights must be (match, mismatch, gap)");
    Weights out;
    Rational* f[] = {&out.match, &out.mismatch, &out.gap};
    for (int k = 0; k < 3; ++k) *f[k] = parse_rational(py::str(t[k]).cast<std::string>());
    out.validate();
    return out;
}

ScoreKind kind(const std::string& s) {
    static const std::map<std::string, ScoreKind> names = {{"string-substring", ScoreKind::string_substring},
                                                           {"prefix-suffix", ScoreKind::prefix_suffix},
                                                           {"suffix-prefix", ScoreKind::suffix_prefix},
                                                           {"substring-string", ScoreKind::substring_string}};
    auto it = names.find(s);
    if (it == names.end()) throw Error("unknown score kind: " + s);
    return it->second;
}

py::list matches(const std::vector<Match>& ms) {
    py::list out;
    for (const auto& x : ms) out.append(py::make_tuple(x.start, x.end, fraction(x.score)));
    return out;
}

py::list slp_matches(const std::vector<SlpMatch>& ms) {
    py::list out;
    for (const auto& x : ms) out.append(py::make_tuple(big(x.start), big(x.end), fraction(x.score)));
    return out;
}

SlpMode slp_mode(const std::string& s) {
    if (s == "minimal") return SlpMode::minimal;
    if (s == "fixed") return SlpMode::fixed;
    if (s == "bounded") return SlpMode::bounded;
    throw Error("unknown mode: " + s);
}

}  // namespace

PYBIND11_MODULE(_slcs, m) {
    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<ScoreOracle>(m, "SemiLocal")
        .def(py::init([](const std::string& a, const std::string& b) { return ScoreOracle(encode(a), encode(b)); }))
        .def("score", [](const ScoreOracle& o, const std::string& k, int i, int j) { return o.score(kind(k), i, j); })
        .def("h", &ScoreOracle::h)
        .def("traceback", [](const ScoreOracle& o, int i, int j) { return decode(o.traceback(i, j)); })
        .def("seaweed", [](const ScoreOracle& o) {
            std::ostringstream os;
            write_seaweed(os, o.seaweed());
            return os.str();
        });

    m.def("lcs", [](const std::string& a, const std::string& b) {
        return ScoreOracle(encode(a), encode(b)).score(ScoreKind::substring_string, 0, static_cast<int>(a.size()));
    });
    m.def("cyclic_lcs", [](const std::string& a, const std::string& b) { return cyclic_lcs(encode(a), encode(b)); });
    m.def("longest_repeating_subsequence", [](const std::string& a) { return longest_repeating_subsequence(encode(a)); });
    m.def("lis", [](const std::vector<int>& seq) { return lis(Text(seq.begin(), seq.end())); });

    m.def("alignment_score", [](const std::string& a, const std::string& b, py::object w) {
        return fraction(alignment_score(encode(a), encode(b), weights(w)));
    }, py::arg("a"), py::arg("b"), py::arg("weights") = py::none());
    m.def("complete_matching", [](const std::string& p, const std::string& t, py::object w) {
        return matches(complete_matching(encode(p), encode(t), weights(w)));
    }, py::arg("p"), py::arg("t"), py::arg("weights") = py::none());
    m.def("threshold_matching", [](const std::string& p, const std::string& t, const std::string& h, py::object w) {
        return matches(threshold_matching(encode(p), encode(t), weights(w), parse_rational(h)).windows);
    }, py::arg("p"), py::arg("t"), py::arg("threshold"), py::arg("weights") = py::none());
    m.def("tandem", [](const std::string& a, const std::string& u, py::object w) {
        auto r = tandem_cyclic(encode(a), encode(u), weights(w));
        return py::make_tuple(r.k, r.offset, fraction(r.score));
    }, py::arg("a"), py::arg("u"), py::arg("weights") = py::none());

    m.def("max_clique", [](const std::vector<std::pair<int, int>>& intervals) {
        auto c = max_clique_circle(IntervalModel::from_intervals(intervals));
        return py::make_tuple(c.size, c.intervals);
    });

    m.def("window_window", [](const std::string& a, const std::string& b, int w) {
        return window_window(encode(a), encode(b), w);
    });
    m.def("spliced_alignment", [](const std::string& a, const std::string& b,
                                  const std::vector<std::pair<int, int>>& exons, py::object w) {
        auto r = spliced_alignment(encode(a), encode(b), exons, weights(w));
        return py::make_tuple(fraction(r.score), r.chain);
    }, py::arg("a"), py::arg("b"), py::arg("exons"), py::arg("weights") = py::none());

    py::class_<Slp>(m, "Slp")
        .def_static("parse", &Slp::parse)
        .def_static("lz78", [](const std::string& t) { return lz78_slp(encode(t)); })
        .def("__str__", &Slp::str)
        .def("__len__", [](const Slp& s) { return s.size(); })
        .def_property_readonly("length", [](const Slp& s) { return big(s.length()); })
        .def("expand", [](const Slp& s, std::size_t limit) { return decode(slp_expand(s, limit)); },
             py::arg("limit") = std::size_t(1) << 22)
        .def("global_subseq", [](const Slp& s, const std::string& p) { return global_subseq(s, encode(p)); })
        .def("lcs", [](const Slp& s, const std::string& p) { return three_way_semilocal(s, encode(p)).lcs(); })
        .def("local_subseq", [](const Slp& s, const std::string& p, const std::string& mode, const std::string& w) {
            return slp_matches(local_subseq_slp(s, encode(p), slp_mode(mode), mpz_class(w)));
        }, py::arg("p"), py::arg("mode") = "minimal", py::arg("window") = "0")
        .def("local_subseq_count", [](const Slp& s, const std::string& p, const std::string& mode, const std::string& w) {
            return big(local_subseq_slp_count(s, encode(p), slp_mode(mode), mpz_class(w)));
        }, py::arg("p"), py::arg("mode") = "minimal", py::arg("window") = "0")
        .def("threshold_count", [](const Slp& s, const std::string& p, const std::string& h, py::object w) {
            return big(threshold_matching_slp_count(s, encode(p), weights(w), parse_rational(h)));
        }, py::arg("p"), py::arg("threshold"), py::arg("weights") = py::none());
}
