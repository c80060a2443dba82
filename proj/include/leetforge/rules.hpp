#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leetforge {

/// One substitution: every `source` character becomes `replacement`.
struct CharPair {
    char source = 0;
    char replacement = 0;

    friend bool operator==(const CharPair&, const CharPair&) = default;
};

enum class Arity { single = 1, dual = 2, triad = 3 };

const char* arity_name(Arity a) noexcept;

struct ReplacementRule {
    std::string id;
    std::vector<CharPair> pairs;
    bool case_insensitive = true;

    Arity arity() const noexcept { return static_cast<Arity>(pairs.size()); }

    friend bool operator==(const ReplacementRule&, const ReplacementRule&) = default;
};

/// Ordered, validated collection of rules with named subsets.
///
/// The arity subsets ("singles", "duals", "triads") are derived from the
/// rules themselves. Any other subset (e.g. "top5") is stored explicitly as a
/// list of rule ids.
class RuleSet {
public:
    RuleSet() = default;

    /// Appends a rule after validating it. Throws leetforge::Error.
    void add(ReplacementRule rule);

    /// Defines (or replaces) an explicit named subset. Every id must exist.
    void define_subset(std::string name, std::vector<std::string> ids);

    std::span<const ReplacementRule> rules() const noexcept { return rules_; }
    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    const ReplacementRule& operator[](std::size_t i) const { return rules_[i]; }

    /// nullptr when no rule has this id.
    const ReplacementRule* find(std::string_view id) const;

    std::vector<const ReplacementRule*> singles() const { return by_arity(Arity::single); }
    std::vector<const ReplacementRule*> duals() const { return by_arity(Arity::dual); }
    std::vector<const ReplacementRule*> triads() const { return by_arity(Arity::triad); }
    std::vector<const ReplacementRule*> top5() const { return named("top5"); }

    /// Rules of the named subset, in subset order. Empty for unknown names.
    std::vector<const ReplacementRule*> named(std::string_view name) const;

    /// A standalone RuleSet holding only the named subset's rules, or the
    /// whole set for "all".
    RuleSet subset(std::string_view name) const;

    bool has_subset(std::string_view name) const;

    const std::map<std::string, std::vector<std::string>, std::less<>>& explicit_subsets() const noexcept {
        return subsets_;
    }

    friend bool operator==(const RuleSet&, const RuleSet&) = default;

private:
    std::vector<const ReplacementRule*> by_arity(Arity a) const;

    std::vector<ReplacementRule> rules_;
    std::map<std::string, std::vector<std::string>, std::less<>> subsets_;
};

/// Checks the rule invariants: 1..3 pairs, distinct sources, replacement
/// differs from source, plain single-byte ASCII characters.
void validate_rule(const ReplacementRule& rule);

/// The 67 canonical rules: singles S1..S43, duals D1..D9, triads T1..T15,
/// plus the "top5" subset.
const RuleSet& builtin_rules();

/// Rule-file reader. Format, one rule per line:
///
///     <ID><TAB><src>><rep>{,<src>><rep>}[<TAB>cs]
///
/// Lines starting with '#' are comments, except `#@subset <name> <id>,<id>...`
/// which declares a named subset. A line with no TAB is a bare pair list and
/// receives an autogenerated id "R<n>" (n = 1-based rule ordinal).
/// The optional trailing "cs" field marks the rule case-sensitive.
RuleSet parse_rules(std::string_view text);

std::string serialize_rules(const RuleSet& rs);

/// Hashcat substitute-token export: one line per rule, `s<src><rep>` tokens
/// separated by spaces. Case-insensitive letter sources emit the lowercase
/// and uppercase token. Tokens are ordered so that sequential application
/// matches simultaneous replacement.
std::string export_hashcat(const RuleSet& rs);

/// Tokens for a single rule, as they appear on its exported line.
std::vector<std::string> hashcat_tokens(const ReplacementRule& rule);

/// Resolves a `--rules` style argument: "builtin" or a file path, with an
/// optional subset name ("all" for everything).
RuleSet load_rules_arg(std::string_view spec, std::string_view subset = "all");

}  // namespace leetforge
