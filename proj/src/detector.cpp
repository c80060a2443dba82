#include "leetforge/detector.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "leetforge/generator.hpp"

namespace leetforge {
namespace {

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::vector<Finding> deleet(std::string_view password, const RuleSet& rs) {
    std::vector<Finding> out;
    std::string base;
    std::string reapplied;
    for (const auto& rule : rs.rules()) {
        std::array<char, 256> inverse{};
        bool ambiguous = false;
        for (const auto& p : rule.pairs) {
            auto rep = static_cast<unsigned char>(p.replacement);
            if (inverse[rep]) ambiguous = true;
            inverse[rep] = rule.case_insensitive
                               ? static_cast<char>(std::tolower(static_cast<unsigned char>(p.source)))
                               : p.source;
        }
        if (ambiguous) continue;

        base.assign(password);
        bool changed = false;
        for (auto& c : base) {
            if (char src = inverse[static_cast<unsigned char>(c)]) {
                c = src;
                changed = true;
            }
        }
        if (!changed) continue;
        if (!CompiledRule(rule).apply(base, reapplied, false) || reapplied != password) continue;
        out.push_back({base, rule.id});
    }
    return out;
}

Dictionary::Dictionary(const WordList& wl) {
    words_.reserve(wl.words.size());
    for (const auto& w : wl.words) words_.insert(ascii_lower(w));
}

bool Dictionary::contains(std::string_view word) const { return words_.contains(ascii_lower(word)); }

DetectionResult audit(std::string_view password, const RuleSet& rs, const Dictionary& dictionary) {
    DetectionResult res;
    res.password = password;
    if (dictionary.contains(password)) res.findings.push_back({std::string(password), std::string(kBaseRuleId)});
    for (auto& f : deleet(password, rs))
        if (dictionary.contains(f.base_word)) res.findings.push_back(std::move(f));
    std::sort(res.findings.begin(), res.findings.end());
    res.findings.erase(std::unique(res.findings.begin(), res.findings.end()), res.findings.end());
    res.is_pattern_based = !res.findings.empty();
    return res;
}

DetectionResult audit(std::string_view password, const RuleSet& rs, const WordList& dictionary) {
    return audit(password, rs, Dictionary(dictionary));
}

}  // namespace leetforge
