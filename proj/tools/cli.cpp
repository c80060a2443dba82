#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "leetforge/bench.hpp"
#include "leetforge/corpus.hpp"
#include "leetforge/cracker.hpp"
#include "leetforge/detector.hpp"
#include "leetforge/error.hpp"
#include "leetforge/generator.hpp"
#include "leetforge/hashstore.hpp"
#include "leetforge/io.hpp"
#include "leetforge/rules.hpp"

namespace leetforge::cli {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RuleArgs {
    std::string rules = "builtin";
    std::string subset = "all";

    void attach(CLI::App* app, bool optional = false) {
        app->add_option("--rules", rules,
                        optional ? "Rule file, 'builtin', or 'none' (words only)" : "Rule file or 'builtin'")
            ->capture_default_str();
        app->add_option("--subset", subset, "Rule subset: all, singles, duals, triads, top5, ...")
            ->capture_default_str();
    }

    RuleSet load() const { return load_rules_arg(rules, subset); }
};

struct GenArgs {
    bool include_base = false;
    bool strict_multi = false;
    bool no_dedup = false;

    void attach(CLI::App* app, bool with_base = true) {
        if (with_base) app->add_flag("--include-base", include_base, "Also emit the unmangled words");
        app->add_flag("--strict-multi", strict_multi, "Dual/triad rules need every source character present");
        app->add_flag("--no-dedup", no_dedup, "Keep duplicate candidates");
    }

    GenOptions options() const { return {include_base, strict_multi, !no_dedup}; }
};

nlohmann::json stats_json(const GenStats& st) {
    return {{"emitted", st.emitted},
            {"emitted_without_base", st.emitted_without_base()},
            {"base", st.base},
            {"single", st.single},
            {"dual", st.dual},
            {"triad", st.triad},
            {"suppressed_duplicates", st.suppressed_duplicates}};
}

nlohmann::json crack_json(const CrackResult& r, const HashStore& store, bool with_timing) {
    nlohmann::json matches = nlohmann::json::array();
    for (const auto& m : r.matches)
        matches.push_back(
            {{"digest", to_hex(m.digest)}, {"plaintext", m.plaintext}, {"base_word", m.base_word}, {"rule_id", m.rule_id}});
    nlohmann::json j = {{"attempted", r.attempted},
                        {"recovered_new", r.recovered_new},
                        {"hash_raw", store.raw_count()},
                        {"hash_unique", store.unique_count()},
                        {"matches", std::move(matches)}};
    if (with_timing) {
        j["elapsed_seconds"] = r.elapsed_seconds;
        j["throughput"] = r.throughput;
    }
    return j;
}

nlohmann::json detection_json(const DetectionResult& d) {
    nlohmann::json findings = nlohmann::json::array();
    for (const auto& f : d.findings) findings.push_back({{"base_word", f.base_word}, {"rule_id", f.rule_id}});
    return {{"password", d.password}, {"findings", std::move(findings)}, {"is_pattern_based", d.is_pattern_based}};
}

void write_output(const std::string& path, std::string_view data, std::ostream& out) {
    if (path.empty() || path == "-")
        out << data;
    else
        write_file(path, data);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leetspeak wordlist mangling and hash-recovery benchmark toolkit", "leetforge"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    unsigned threads = 0;
    std::string algorithm = "md5";

    // gen
    auto* gen = app.add_subcommand("gen", "Generate mangled candidates from wordlists");
    std::vector<std::string> gen_words;
    std::string gen_output, gen_prov, gen_stats;
    RuleArgs gen_rules;
    GenArgs gen_opts;
    gen->add_option("--wordlist,wordlists", gen_words, "Wordlist files")->required();
    gen_rules.attach(gen);
    gen_opts.attach(gen);
    gen->add_option("-o,--output", gen_output, "Candidate output file (default: standard output)");
    gen->add_option("--provenance", gen_prov, "Write candidate<TAB>base<TAB>rule_id lines to this file");
    gen->add_option("--stats-json", gen_stats, "Write generation statistics as JSON to this file");

    // crack
    auto* crk = app.add_subcommand("crack", "Match candidates against a hash list");
    std::vector<std::string> crk_words;
    std::string crk_hashes, crk_pot;
    RuleArgs crk_rules;
    crk_rules.rules = "none";
    GenArgs crk_opts;
    bool crk_json = false, crk_timing = false;
    std::size_t chunk_bytes = CrackOptions{}.chunk_bytes;
    crk->add_option("--hashes", crk_hashes, "Hash list file, one hex digest per line")->required();
    crk->add_option("--wordlist,--candidates", crk_words, "Wordlist or candidate files")->required();
    crk_rules.attach(crk, true);
    crk_opts.attach(crk);
    crk->add_option("--algorithm", algorithm, "Digest algorithm")->capture_default_str();
    crk->add_option("--threads", threads, "Worker threads (default: LEETFORGE_THREADS or all cores)");
    crk->add_option("--chunk-bytes", chunk_bytes, "Candidate bytes per work unit")->capture_default_str();
    crk->add_option("--potfile", crk_pot, "Write hexdigest:plaintext lines to this file");
    crk->add_flag("--json", crk_json, "Print a JSON summary instead of potfile lines");
    crk->add_flag("--timing", crk_timing, "Include elapsed time and throughput in the JSON summary");

    // detect
    auto* det = app.add_subcommand("detect", "Detect replacement patterns in passwords");
    std::string det_password;
    bool det_stdin = false;
    std::vector<std::string> det_dict;
    RuleArgs det_rules;
    auto* pw_opt = det->add_option("--password", det_password, "Password to audit");
    auto* stdin_opt = det->add_flag("--stdin", det_stdin, "Read passwords from standard input, one per line");
    pw_opt->excludes(stdin_opt);
    det->add_option("--dict", det_dict, "Dictionary files; without one, raw de-leet findings are reported");
    det_rules.attach(det);

    // bench
    auto* bch = app.add_subcommand("bench", "Baseline vs. pattern recovery benchmark");
    std::vector<std::string> bch_words;
    std::string bch_hashes, bch_json, bch_pot;
    RuleArgs bch_rules;
    GenArgs bch_opts;
    bool patterns_only = false, bch_timing = false, bch_table = false;
    bch->add_option("--wordlist", bch_words, "Wordlist files")->required();
    bch->add_option("--hashes", bch_hashes, "Hash list file")->required();
    bch_rules.attach(bch);
    bch_opts.attach(bch, false);
    bch->add_flag("--patterns-only", patterns_only, "Phase 2 uses mangled candidates only");
    bch->add_option("--algorithm", algorithm, "Digest algorithm")->capture_default_str();
    bch->add_option("--threads", threads, "Worker threads (default: LEETFORGE_THREADS or all cores)");
    bch->add_option("--json", bch_json, "Write the full JSON report (with timing) to this file");
    bch->add_option("--potfile", bch_pot, "Write the pattern phase potfile to this file");
    bch->add_flag("--timing", bch_timing, "Include timing fields in the report printed to standard output");
    bch->add_flag("--table", bch_table, "Print a human-readable table instead of JSON");

    // export-rules
    auto* exp = app.add_subcommand("export-rules", "Export rules as hashcat substitute rules or a rule file");
    bool exp_builtin = false;
    std::string exp_file, exp_format = "hashcat", exp_subset = "all";
    auto* b_opt = exp->add_flag("--builtin", exp_builtin, "Use the builtin rule set");
    auto* f_opt = exp->add_option("--rules", exp_file, "Rule file");
    b_opt->excludes(f_opt);
    exp->add_option("--subset", exp_subset, "Rule subset")->capture_default_str();
    exp->add_option("--format", exp_format, "hashcat or rules")
        ->check(CLI::IsMember({"hashcat", "rules"}))
        ->capture_default_str();

    // stats
    auto* sts = app.add_subcommand("stats", "Per-source wordlist counts and hash list counts");
    std::vector<std::string> sts_words;
    std::string sts_hashes;
    sts->add_option("--wordlist,wordlists", sts_words, "Wordlist files");
    sts->add_option("--hashes", sts_hashes, "Hash list file");
    sts->add_option("--algorithm", algorithm, "Digest algorithm")->capture_default_str();

    std::vector<const char*> argv{"leetforge"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitUsage;
    }

    try {
        CrackOptions crack_opts{threads, chunk_bytes};

        if (gen->parsed()) {
            auto wl = load_wordlist_files(gen_words);
            auto rs = gen_rules.load();
            std::string cand, prov;
            auto st = generate(wl, rs, gen_opts.options(), [&](const CandidateRecord& r) {
                cand += r.candidate;
                cand += '\n';
                if (!gen_prov.empty()) {
                    prov += r.candidate;
                    prov += '\t';
                    prov += r.base_word;
                    prov += '\t';
                    prov += r.rule_id;
                    prov += '\n';
                }
            });
            write_output(gen_output, cand, out);
            if (!gen_prov.empty()) write_output(gen_prov, prov, out);
            if (!gen_stats.empty()) write_output(gen_stats, stats_json(st).dump(2) + "\n", out);
            return kExitOk;
        }

        if (crk->parsed()) {
            auto alg = parse_algorithm(algorithm);
            auto store = HashStore::load(read_file(crk_hashes), alg);
            auto wl = load_wordlist_files(crk_words);
            CrackResult res;
            if (crk_rules.rules == "none") {
                res = crack(store, base_candidates(wl), alg, crack_opts);
            } else {
                auto rs = crk_rules.load();
                res = crack(store, generate(wl, rs, crk_opts.options()).candidates, alg, crack_opts);
            }
            if (!crk_pot.empty()) write_file(crk_pot, store.potfile());
            if (crk_json) {
                out << crack_json(res, store, crk_timing).dump(2) << '\n';
            } else {
                for (const auto& m : res.matches) out << to_hex(m.digest) << ':' << m.plaintext << '\n';
            }
            return kExitOk;
        }

        if (det->parsed()) {
            if (det_password.empty() == !det_stdin) throw UsageError("detect needs exactly one of --password or --stdin");
            auto rs = det_rules.load();
            std::optional<Dictionary> dict;
            if (!det_dict.empty()) dict.emplace(load_wordlist_files(det_dict));
            auto report = [&](std::string_view pw) {
                DetectionResult d;
                if (dict) {
                    d = audit(pw, rs, *dict);
                } else {
                    d.password = pw;
                    d.findings = deleet(pw, rs);
                    std::sort(d.findings.begin(), d.findings.end());
                    d.is_pattern_based = !d.findings.empty();
                }
                out << detection_json(d).dump() << '\n';
            };
            if (det_stdin) {
                std::string line;
                while (std::getline(std::cin, line)) {
                    if (!line.empty() && line.back() == '\r') line.pop_back();
                    if (!line.empty()) report(line);
                }
            } else {
                report(det_password);
            }
            return kExitOk;
        }

        if (bch->parsed()) {
            BenchOptions opts;
            opts.gen = bch_opts.options();
            opts.patterns_only = patterns_only;
            opts.algorithm = parse_algorithm(algorithm);
            opts.crack = crack_opts;
            opts.rule_set_name = bch_rules.rules == "builtin" ? "builtin" : base_name(bch_rules.rules);
            if (bch_rules.subset != "all") opts.rule_set_name += ":" + bch_rules.subset;
            auto rs = bch_rules.load();
            auto wl = load_wordlist_files(bch_words);
            auto run = run_benchmark(wl, read_file(bch_hashes), rs, opts);
            if (!bch_json.empty()) write_file(bch_json, to_json(run.report, true).dump(2) + "\n");
            if (!bch_pot.empty()) write_file(bch_pot, run.pattern_store.potfile());
            if (bch_table)
                out << format_table(run.report);
            else
                out << to_json(run.report, bch_timing).dump(2) << '\n';
            return kExitOk;
        }

        if (exp->parsed()) {
            if (exp_builtin == !exp_file.empty()) throw UsageError("export-rules needs exactly one of --builtin or --rules");
            auto rs = load_rules_arg(exp_builtin ? "builtin" : exp_file, exp_subset);
            out << (exp_format == "hashcat" ? export_hashcat(rs) : serialize_rules(rs));
            return kExitOk;
        }

        if (sts->parsed()) {
            if (sts_words.empty() && sts_hashes.empty()) throw UsageError("stats needs --wordlist and/or --hashes");
            nlohmann::json j = nlohmann::json::object();
            if (!sts_words.empty()) {
                auto st = corpus_stats(load_wordlist_files(sts_words));
                nlohmann::json sources = nlohmann::json::array();
                for (const auto& s : st.sources) sources.push_back({{"source", s.name}, {"count", s.raw_count}});
                j["corpus"] = {{"sources", std::move(sources)}, {"total", st.total}, {"unique", st.unique}};
            }
            if (!sts_hashes.empty()) {
                auto store = HashStore::load(read_file(sts_hashes), parse_algorithm(algorithm));
                j["hashes"] = {{"raw", store.raw_count()}, {"unique", store.unique_count()}};
            }
            out << j.dump(2) << '\n';
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "leetforge: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "leetforge: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return e.is_input_error() ? kExitInput : kExitRuntime;
    } catch (const std::exception& e) {
        err << "leetforge: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace leetforge::cli
