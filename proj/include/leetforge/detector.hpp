#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "leetforge/corpus.hpp"
#include "leetforge/rules.hpp"

namespace leetforge {

struct Finding {
    std::string base_word;
    std::string rule_id;

    friend bool operator==(const Finding&, const Finding&) = default;
    friend auto operator<=>(const Finding& a, const Finding& b) {
        if (auto c = a.rule_id <=> b.rule_id; c != 0) return c;
        return a.base_word <=> b.base_word;
    }
};

struct DetectionResult {
    std::string password;
    std::vector<Finding> findings;  // sorted by rule id, then base word
    bool is_pattern_based = false;
};

/// Rule-wise exact inverse. For each rule, every replacement character is
/// mapped back to its (lowercase) source; the reconstruction is reported
/// when re-applying the rule reproduces `password`. At most one finding per
/// rule, in rule order. Rules whose pairs share a replacement character
/// have no unique inverse and are skipped.
std::vector<Finding> deleet(std::string_view password, const RuleSet& rs);

/// Case-insensitive (ASCII) word set for audit lookups.
class Dictionary {
public:
    Dictionary() = default;
    explicit Dictionary(const WordList& wl);

    bool contains(std::string_view word) const;
    std::size_t size() const noexcept { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

/// deleet() findings whose base is a dictionary word, plus a BASE finding
/// when the password itself is a dictionary word.
DetectionResult audit(std::string_view password, const RuleSet& rs, const Dictionary& dictionary);
DetectionResult audit(std::string_view password, const RuleSet& rs, const WordList& dictionary);

}  // namespace leetforge
