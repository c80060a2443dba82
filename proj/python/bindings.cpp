#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leetforge/bench.hpp"
#include "leetforge/corpus.hpp"
#include "leetforge/cracker.hpp"
#include "leetforge/detector.hpp"
#include "leetforge/error.hpp"
#include "leetforge/generator.hpp"
#include "leetforge/hashstore.hpp"
#include "leetforge/rules.hpp"

namespace py = pybind11;
using namespace leetforge;

namespace {

py::bytes digest_bytes(const Digest& d) { return {reinterpret_cast<const char*>(d.data()), d.size()}; }

Digest bytes_digest(const HashStore& hs, const py::bytes& b) {
    std::string s = b;
    if (s.size() != digest_width(hs.algorithm()))
        throw Error(Errc::width_mismatch, "digest has " + std::to_string(s.size()) + " bytes");
    Digest d{};
    std::copy(s.begin(), s.end(), d.begin());
    return d;
}

py::dict stats_dict(const GenStats& st) {
    py::dict d;
    d["emitted"] = st.emitted;
    d["emitted_without_base"] = st.emitted_without_base();
    d["base"] = st.base;
    d["single"] = st.single;
    d["dual"] = st.dual;
    d["triad"] = st.triad;
    d["suppressed_duplicates"] = st.suppressed_duplicates;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Leetspeak replacement rules, candidate generation, MD5 matching and pattern detection";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<CharPair>(m, "CharPair")
        .def_readonly("source", &CharPair::source)
        .def_readonly("replacement", &CharPair::replacement)
        .def("__repr__", [](const CharPair& p) { return std::string{p.source, '>', p.replacement}; });

    py::class_<ReplacementRule>(m, "ReplacementRule")
        .def(py::init([](std::string id, const std::vector<std::pair<char, char>>& pairs, bool ci) {
                 ReplacementRule r{std::move(id), {}, ci};
                 for (auto [s, t] : pairs) r.pairs.push_back({s, t});
                 validate_rule(r);
                 return r;
             }),
             py::arg("id"), py::arg("pairs"), py::arg("case_insensitive") = true)
        .def_readonly("id", &ReplacementRule::id)
        .def_readonly("pairs", &ReplacementRule::pairs)
        .def_readonly("case_insensitive", &ReplacementRule::case_insensitive)
        .def_property_readonly("arity", [](const ReplacementRule& r) { return arity_name(r.arity()); })
        .def("__repr__", [](const ReplacementRule& r) { return "<ReplacementRule " + r.id + ">"; });

    py::class_<RuleSet>(m, "RuleSet")
        .def(py::init<>())
        .def("add", &RuleSet::add)
        .def("__len__", &RuleSet::size)
        .def("__getitem__", [](const RuleSet& rs, std::size_t i) {
            if (i >= rs.size()) throw py::index_error();
            return rs[i];
        })
        .def_property_readonly("rules", [](const RuleSet& rs) {
            return std::vector<ReplacementRule>(rs.rules().begin(), rs.rules().end());
        })
        .def("subset", &RuleSet::subset, py::arg("name"))
        .def("ids", [](const RuleSet& rs, const std::string& name) {
            std::vector<std::string> ids;
            for (const auto* r : rs.named(name)) ids.push_back(r->id);
            return ids;
        }, py::arg("name") = "all")
        .def("__eq__", [](const RuleSet& a, const RuleSet& b) { return a == b; });

    m.def("builtin_rules", &builtin_rules, py::return_value_policy::copy);
    m.def("parse_rules", &parse_rules, py::arg("text"));
    m.def("serialize_rules", &serialize_rules, py::arg("rules"));
    m.def("export_hashcat", &export_hashcat, py::arg("rules"));
    m.def("apply_rule", &apply_rule, py::arg("word"), py::arg("rule"), py::arg("strict_multi") = false);

    py::class_<WordList>(m, "WordList")
        .def_readonly("words", &WordList::words)
        .def("__len__", &WordList::size);
    m.def("load_wordlists", [](const std::vector<std::pair<std::string, std::string>>& inputs) {
        std::vector<WordSource> src;
        for (const auto& [name, text] : inputs) src.push_back({name, text});
        return load_wordlists(src);
    }, py::arg("inputs"));
    m.def("corpus_stats", [](const WordList& wl) {
        auto st = corpus_stats(wl);
        py::dict d;
        py::list sources;
        for (const auto& s : st.sources) sources.append(py::make_tuple(s.name, s.raw_count));
        d["sources"] = sources;
        d["total"] = st.total;
        d["unique"] = st.unique;
        return d;
    });

    m.def("generate", [](const WordList& wl, const RuleSet& rs, bool include_base, bool strict_multi, bool dedup) {
        auto g = generate(wl, rs, {include_base, strict_multi, dedup});
        py::list out;
        for (const auto& c : g.candidates) out.append(py::make_tuple(c.candidate, c.base_word, c.rule_id));
        return py::make_tuple(out, stats_dict(g.stats));
    }, py::arg("wordlist"), py::arg("rules"), py::arg("include_base") = false, py::arg("strict_multi") = false,
       py::arg("dedup") = true);
    m.def("count_candidates", [](const WordList& wl, const RuleSet& rs, bool include_base, bool strict_multi, bool dedup) {
        return stats_dict(count_candidates(wl, rs, {include_base, strict_multi, dedup}));
    }, py::arg("wordlist"), py::arg("rules"), py::arg("include_base") = false, py::arg("strict_multi") = false,
       py::arg("dedup") = true);

    m.def("digest_of", [](const py::bytes& data, const std::string& alg) {
        return digest_bytes(digest_of(std::string(data), parse_algorithm(alg)));
    }, py::arg("plaintext"), py::arg("algorithm") = "md5");

    py::class_<HashStore>(m, "HashStore")
        .def_static("load", [](const std::string& text, const std::string& alg) {
            return HashStore::load(text, parse_algorithm(alg));
        }, py::arg("text"), py::arg("algorithm") = "md5")
        .def_property_readonly("raw_count", &HashStore::raw_count)
        .def_property_readonly("unique_count", &HashStore::unique_count)
        .def_property_readonly("recovered_count", &HashStore::recovered_count)
        .def("contains", [](const HashStore& hs, const py::bytes& b) {
            std::string s = b;
            return hs.contains(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
        })
        .def("mark_recovered", [](HashStore& hs, const py::bytes& b, const std::string& pt) {
            return hs.mark_recovered(bytes_digest(hs, b), pt);
        })
        .def("potfile", &HashStore::potfile);

    m.def("crack", [](HashStore& hs, const std::vector<std::tuple<std::string, std::string, std::string>>& cands,
                      const std::string& alg, unsigned threads) {
        std::vector<CandidateRecord> recs;
        recs.reserve(cands.size());
        for (const auto& [c, b, r] : cands) recs.push_back({c, b, r});
        CrackResult res;
        {
            py::gil_scoped_release release;
            res = crack(hs, recs, parse_algorithm(alg), {threads});
        }
        py::dict d;
        d["attempted"] = res.attempted;
        d["recovered_new"] = res.recovered_new;
        py::list matches;
        for (const auto& mt : res.matches)
            matches.append(py::make_tuple(to_hex(mt.digest), mt.plaintext, mt.base_word, mt.rule_id));
        d["matches"] = matches;
        d["elapsed_seconds"] = res.elapsed_seconds;
        d["throughput"] = res.throughput;
        return d;
    }, py::arg("store"), py::arg("candidates"), py::arg("algorithm") = "md5", py::arg("threads") = 0);

    m.def("deleet", [](const std::string& pw, const RuleSet& rs) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto& f : deleet(pw, rs)) out.emplace_back(f.base_word, f.rule_id);
        return out;
    }, py::arg("password"), py::arg("rules"));
    m.def("audit", [](const std::string& pw, const RuleSet& rs, const WordList& dict) {
        auto r = audit(pw, rs, dict);
        py::dict d;
        d["password"] = r.password;
        py::list findings;
        for (const auto& f : r.findings) findings.append(py::make_tuple(f.base_word, f.rule_id));
        d["findings"] = findings;
        d["is_pattern_based"] = r.is_pattern_based;
        return d;
    }, py::arg("password"), py::arg("rules"), py::arg("dictionary"));

    m.def("uplift", [](std::uint64_t baseline, std::uint64_t pattern) -> std::optional<double> {
        auto u = uplift(baseline, pattern);
        if (!u) return std::nullopt;
        return u->value();
    }, py::arg("baseline"), py::arg("pattern"));
    m.def("run_benchmark_json", [](const WordList& wl, const std::string& hashes, const RuleSet& rs,
                                   bool patterns_only, bool strict_multi, unsigned threads) {
        BenchOptions opts;
        opts.patterns_only = patterns_only;
        opts.gen.strict_multi = strict_multi;
        opts.crack.threads = threads;
        std::string json;
        {
            py::gil_scoped_release release;
            json = to_json(run_benchmark(wl, hashes, rs, opts).report).dump();
        }
        return json;
    }, py::arg("wordlist"), py::arg("hashes"), py::arg("rules"), py::arg("patterns_only") = false,
       py::arg("strict_multi") = false, py::arg("threads") = 0);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
