#include "leetforge/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace leetforge {
namespace {

std::string utc_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string Percent::str() const {
    auto mag = tenths < 0 ? -tenths : tenths;
    return (tenths < 0 ? "-" : "") + std::to_string(mag / 10) + "." + std::to_string(mag % 10);
}

std::optional<Percent> uplift(std::uint64_t baseline, std::uint64_t pattern) {
    if (baseline == 0) return std::nullopt;
    bool negative = pattern < baseline;
    std::uint64_t diff = negative ? baseline - pattern : pattern - baseline;
    // round(1000 * diff / baseline), half away from zero
    std::uint64_t tenths = (2000 * diff + baseline) / (2 * baseline);
    auto signed_tenths = static_cast<std::int64_t>(tenths);
    return Percent{negative ? -signed_tenths : signed_tenths};
}

BenchRun run_benchmark(const WordList& wl, std::string_view hash_text, const RuleSet& rs,
                       const BenchOptions& opts) {
    BenchRun run{{}, HashStore::load(hash_text, opts.algorithm), HashStore::load(hash_text, opts.algorithm)};
    auto& rep = run.report;
    rep.started_at = utc_now();
    rep.options = opts;
    rep.rule_set = opts.rule_set_name;
    rep.rule_count = rs.size();
    rep.wordlist_size = wl.size();
    rep.hash_raw = run.baseline_store.raw_count();
    rep.hash_unique = run.baseline_store.unique_count();

    auto baseline = crack(run.baseline_store, base_candidates(wl), opts.algorithm, opts.crack);
    rep.baseline_recovered = baseline.recovered_new;
    rep.baseline_throughput = baseline.throughput;
    rep.baseline_seconds = baseline.elapsed_seconds;

    GenOptions gen = opts.gen;
    gen.include_base = !opts.patterns_only;
    Cracker cracker(run.pattern_store, opts.algorithm, opts.crack);
    std::vector<CandidateRecord> batch;
    constexpr std::size_t kBatch = 1 << 18;
    batch.reserve(kBatch);
    rep.gen_stats = generate(wl, rs, gen, [&](const CandidateRecord& r) {
        batch.push_back(r);
        if (batch.size() == kBatch) {
            cracker.feed(batch);
            batch.clear();
        }
    });
    cracker.feed(batch);
    auto pattern = cracker.finish();
    rep.candidate_count = rep.gen_stats.emitted;
    rep.pattern_recovered = pattern.recovered_new;
    rep.pattern_throughput = pattern.throughput;
    rep.pattern_seconds = pattern.elapsed_seconds;

    rep.uplift_percent = uplift(rep.baseline_recovered, rep.pattern_recovered);
    rep.finished_at = utc_now();
    return run;
}

nlohmann::json to_json(const BenchReport& r, bool with_timing) {
    nlohmann::json j;
    j["wordlist_size"] = r.wordlist_size;
    j["candidate_count"] = r.candidate_count;
    j["hash_raw"] = r.hash_raw;
    j["hash_unique"] = r.hash_unique;
    j["baseline_recovered"] = r.baseline_recovered;
    j["pattern_recovered"] = r.pattern_recovered;
    j["uplift_percent"] = r.uplift_percent ? nlohmann::json(r.uplift_percent->str()) : nlohmann::json(nullptr);
    j["generation"] = {
        {"emitted", r.gen_stats.emitted},
        {"emitted_without_base", r.gen_stats.emitted_without_base()},
        {"base", r.gen_stats.base},
        {"single", r.gen_stats.single},
        {"dual", r.gen_stats.dual},
        {"triad", r.gen_stats.triad},
        {"suppressed_duplicates", r.gen_stats.suppressed_duplicates},
    };
    nlohmann::json meta = {
        {"rule_set", r.rule_set},
        {"rule_count", r.rule_count},
        {"algorithm", algorithm_name(r.options.algorithm)},
        {"options",
         {{"patterns_only", r.options.patterns_only},
          {"strict_multi", r.options.gen.strict_multi},
          {"dedup", r.options.gen.dedup}}},
    };
    if (with_timing) {
        j["throughput"] = {{"baseline", r.baseline_throughput}, {"pattern", r.pattern_throughput}};
        j["elapsed_seconds"] = {{"baseline", r.baseline_seconds}, {"pattern", r.pattern_seconds}};
        meta["threads"] = resolve_threads(r.options.crack.threads);
        meta["started_at"] = r.started_at;
        meta["finished_at"] = r.finished_at;
    }
    j["metadata"] = std::move(meta);
    return j;
}

std::string format_table(const BenchReport& r) {
    char buf[128];
    std::string out;
    auto row = [&](const char* label, const std::string& value) {
        std::snprintf(buf, sizeof buf, "%-22s %s\n", label, value.c_str());
        out += buf;
    };
    auto num = [](std::uint64_t v) { return std::to_string(v); };
    auto rate = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.0f cand/s", v);
        return std::string(buf);
    };
    row("rule set", r.rule_set + " (" + num(r.rule_count) + " rules)");
    row("words", num(r.wordlist_size));
    row("candidates", num(r.candidate_count));
    row("hashes (raw)", num(r.hash_raw));
    row("hashes (unique)", num(r.hash_unique));
    row("baseline recovered", num(r.baseline_recovered));
    row("pattern recovered", num(r.pattern_recovered));
    row("uplift", r.uplift_percent ? r.uplift_percent->str() + "%" : "n/a");
    row("baseline throughput", rate(r.baseline_throughput));
    row("pattern throughput", rate(r.pattern_throughput));
    return out;
}

}  // namespace leetforge
