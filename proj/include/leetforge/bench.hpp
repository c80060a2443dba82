#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "leetforge/corpus.hpp"
#include "leetforge/cracker.hpp"
#include "leetforge/generator.hpp"
#include "leetforge/hashstore.hpp"
#include "leetforge/rules.hpp"

namespace leetforge {

/// A percentage held in exact tenths, so formatting never drifts.
struct Percent {
    std::int64_t tenths = 0;

    double value() const noexcept { return static_cast<double>(tenths) / 10.0; }
    std::string str() const;  // one decimal, e.g. "75.6"

    friend bool operator==(const Percent&, const Percent&) = default;
};

/// 100 * (pattern - baseline) / baseline, rounded half away from zero to
/// one decimal. Absent when baseline is 0.
std::optional<Percent> uplift(std::uint64_t baseline, std::uint64_t pattern);

struct BenchOptions {
    GenOptions gen;
    bool patterns_only = false;
    Algorithm algorithm = Algorithm::md5;
    CrackOptions crack;
    std::string rule_set_name = "builtin";
};

struct BenchReport {
    std::uint64_t wordlist_size = 0;
    std::uint64_t candidate_count = 0;
    std::uint64_t hash_raw = 0;
    std::uint64_t hash_unique = 0;
    std::uint64_t baseline_recovered = 0;
    std::uint64_t pattern_recovered = 0;
    std::optional<Percent> uplift_percent;
    double baseline_throughput = 0.0;
    double pattern_throughput = 0.0;
    double baseline_seconds = 0.0;
    double pattern_seconds = 0.0;
    GenStats gen_stats;
    std::string rule_set;
    std::uint64_t rule_count = 0;
    BenchOptions options;
    std::string started_at;
    std::string finished_at;
};

struct BenchRun {
    BenchReport report;
    HashStore baseline_store;
    HashStore pattern_store;
};

/// Phase 1 cracks the bare words, phase 2 the generated candidates (base
/// words included unless `patterns_only`). Each phase loads its own store
/// from the same hash text.
BenchRun run_benchmark(const WordList& wl, std::string_view hash_text, const RuleSet& rs,
                       const BenchOptions& opts);

/// The report as JSON. Timing fields (throughput, seconds, timestamps) are
/// only present when `with_timing` is set, so the rest is reproducible.
nlohmann::json to_json(const BenchReport& r, bool with_timing = true);

/// Human-readable summary table.
std::string format_table(const BenchReport& r);

}  // namespace leetforge
