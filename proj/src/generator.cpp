#include "leetforge/generator.hpp"

#include <cctype>
#include <unordered_set>

namespace leetforge {

CompiledRule::CompiledRule(const ReplacementRule& rule) : rule_(&rule) {
    for (int c = 0; c < 256; ++c) table_[c] = static_cast<unsigned char>(c);
    for (std::size_t i = 0; i < rule.pairs.size(); ++i) {
        const auto& p = rule.pairs[i];
        auto src = static_cast<unsigned char>(p.source);
        auto rep = static_cast<unsigned char>(p.replacement);
        auto mark = static_cast<std::uint8_t>(i + 1);
        table_[src] = rep;
        pair_of_[src] = mark;
        if (rule.case_insensitive && std::isalpha(src)) {
            auto lo = static_cast<unsigned char>(std::tolower(src));
            auto up = static_cast<unsigned char>(std::toupper(src));
            table_[lo] = table_[up] = rep;
            pair_of_[lo] = pair_of_[up] = mark;
        }
    }
}

bool CompiledRule::apply(std::string_view word, std::string& out, bool strict) const {
    out.resize(word.size());
    unsigned seen = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto c = static_cast<unsigned char>(word[i]);
        out[i] = static_cast<char>(table_[c]);
        if (pair_of_[c]) seen |= 1u << (pair_of_[c] - 1);
    }
    if (seen == 0) return false;
    if (strict && rule_->pairs.size() > 1 && seen != (1u << rule_->pairs.size()) - 1) return false;
    return true;
}

std::optional<std::string> apply_rule(std::string_view word, const ReplacementRule& rule, bool strict_multi) {
    CompiledRule compiled(rule);
    std::string out;
    if (!compiled.apply(word, out, strict_multi)) return std::nullopt;
    return out;
}

GenStats generate(const WordList& wl, const RuleSet& rs, const GenOptions& opts, const CandidateSink& sink) {
    std::vector<CompiledRule> compiled;
    compiled.reserve(rs.size());
    for (const auto& r : rs.rules()) compiled.emplace_back(r);

    GenStats st;
    std::unordered_set<std::string> seen;
    std::unordered_set<std::string_view> base_words;
    if (opts.dedup && opts.include_base) base_words.insert(wl.words.begin(), wl.words.end());

    CandidateRecord rec;
    auto emit = [&](std::uint64_t& bucket) {
        ++st.emitted;
        ++bucket;
        if (sink) sink(rec);
    };

    std::string buf;
    for (const auto& word : wl.words) {
        if (opts.include_base) {
            if (!opts.dedup || seen.insert(word).second) {
                rec.candidate = word;
                rec.base_word = word;
                rec.rule_id = kBaseRuleId;
                emit(st.base);
            } else {
                ++st.suppressed_duplicates;
            }
        }
        for (const auto& cr : compiled) {
            if (!cr.apply(word, buf, opts.strict_multi)) continue;
            if (opts.dedup && (base_words.contains(buf) || !seen.insert(buf).second)) {
                ++st.suppressed_duplicates;
                continue;
            }
            rec.candidate = buf;
            rec.base_word = word;
            rec.rule_id = cr.rule().id;
            switch (cr.rule().arity()) {
                case Arity::single: emit(st.single); break;
                case Arity::dual: emit(st.dual); break;
                case Arity::triad: emit(st.triad); break;
            }
        }
    }
    return st;
}

Generated generate(const WordList& wl, const RuleSet& rs, const GenOptions& opts) {
    Generated g;
    g.stats = generate(wl, rs, opts, [&](const CandidateRecord& r) { g.candidates.push_back(r); });
    return g;
}

GenStats count_candidates(const WordList& wl, const RuleSet& rs, const GenOptions& opts) {
    return generate(wl, rs, opts, CandidateSink{});
}

std::vector<CandidateRecord> base_candidates(const WordList& wl) {
    std::vector<CandidateRecord> out;
    out.reserve(wl.words.size());
    for (const auto& w : wl.words) out.push_back({w, w, std::string(kBaseRuleId)});
    return out;
}

}  // namespace leetforge
