#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leetforge/corpus.hpp"
#include "leetforge/rules.hpp"

namespace leetforge {

inline constexpr std::string_view kBaseRuleId = "BASE";

struct CandidateRecord {
    std::string candidate;
    std::string base_word;
    std::string rule_id;

    friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

struct GenOptions {
    bool include_base = false;
    bool strict_multi = false;
    bool dedup = true;
};

struct GenStats {
    std::uint64_t emitted = 0;
    std::uint64_t suppressed_duplicates = 0;
    std::uint64_t base = 0;
    std::uint64_t single = 0;
    std::uint64_t dual = 0;
    std::uint64_t triad = 0;

    std::uint64_t emitted_without_base() const noexcept { return emitted - base; }

    friend bool operator==(const GenStats&, const GenStats&) = default;
};

/// A rule lowered to a byte translation table.
class CompiledRule {
public:
    explicit CompiledRule(const ReplacementRule& rule);

    /// Replace-all application. Writes into `out` and returns false when no
    /// source character matched (or, with `strict`, when some pair's
    /// source is missing).
    bool apply(std::string_view word, std::string& out, bool strict) const;

    const ReplacementRule& rule() const noexcept { return *rule_; }

private:
    const ReplacementRule* rule_;
    std::array<unsigned char, 256> table_{};
    std::array<std::uint8_t, 256> pair_of_{};  // 1-based pair index, 0 = not a source
};

/// Every occurrence of every source character (both cases for
/// case-insensitive rules) is replaced simultaneously. Absent when nothing
/// changed, or with `strict_multi` when a multi-pair rule is missing one of
/// its sources.
std::optional<std::string> apply_rule(std::string_view word, const ReplacementRule& rule,
                                      bool strict_multi = false);

using CandidateSink = std::function<void(const CandidateRecord&)>;

/// Word-major, rule-order candidate stream. Returns the run statistics.
///
/// With dedup, a candidate string is emitted at most once. When base words
/// are included, a mangle that equals some word of `wl` is always credited
/// to that word's BASE record rather than to the rule.
GenStats generate(const WordList& wl, const RuleSet& rs, const GenOptions& opts, const CandidateSink& sink);

struct Generated {
    std::vector<CandidateRecord> candidates;
    GenStats stats;
};

Generated generate(const WordList& wl, const RuleSet& rs, const GenOptions& opts);

GenStats count_candidates(const WordList& wl, const RuleSet& rs, const GenOptions& opts);

/// Candidate records for the words alone (rule id BASE).
std::vector<CandidateRecord> base_candidates(const WordList& wl);

}  // namespace leetforge
