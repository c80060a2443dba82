#include "leetforge/rules.hpp"

#include <algorithm>
#include <cctype>

#include "leetforge/error.hpp"
#include "leetforge/io.hpp"

namespace leetforge {
namespace {

struct TableRow {
    const char* id;
    const char* pairs;  // "ab" per pair: source, replacement
};

// Single replacements, rows 1..43.
constexpr TableRow kSingles[] = {
    {"S1", "a0"},  {"S2", "a1"},  {"S3", "a4"},  {"S4", "a8"},  {"S5", "a@"},  {"S6", "b3"},
    {"S7", "b6"},  {"S8", "b8"},  {"S9", "d0"},  {"S10", "e0"}, {"S11", "e3"}, {"S12", "e5"},
    {"S13", "e8"}, {"S14", "f4"}, {"S15", "g6"}, {"S16", "g9"}, {"S17", "h1"}, {"S18", "h7"},
    {"S19", "i1"}, {"S20", "i7"}, {"S21", "i8"}, {"S22", "i!"}, {"S23", "l1"}, {"S24", "l7"},
    {"S25", "l;"}, {"S26", "l!"}, {"S27", "m,"}, {"S28", "o0"}, {"S29", "o3"}, {"S30", "o@"},
    {"S31", "r."}, {"S32", "s1"}, {"S33", "s2"}, {"S34", "s3"}, {"S35", "s4"}, {"S36", "s5"},
    {"S37", "s6"}, {"S38", "s8"}, {"S39", "s$"}, {"S40", "t7"}, {"S41", "t8"}, {"S42", "v7"},
    {"S43", "z?"},
};

constexpr TableRow kDuals[] = {
    {"D1", "a@o0"}, {"D2", "a@i1"}, {"D3", "a@l1"}, {"D4", "a@e3"}, {"D5", "i1o0"},
    {"D6", "i1e3"}, {"D7", "o0e3"}, {"D8", "o0l1"}, {"D9", "l1e3"},
};

constexpr TableRow kTriads[] = {
    {"T1", "a@o0i1"},  {"T2", "a@o0l1"},  {"T3", "a@o0e3"},  {"T4", "a@l1e3"},  {"T5", "a@i1e3"},
    {"T6", "i1o0e3"},  {"T7", "l1o0e3"},  {"T8", "s$l!o@"},  {"T9", "s$i!o@"},  {"T10", "s$l!a@"},
    {"T11", "s$i!a@"}, {"T12", "b6g9l1"}, {"T13", "b6g9s5"}, {"T14", "g9l1s5"}, {"T15", "b6l1s5"},
};

// Most frequently used single replacements: i->1, o->0, e->3, l->1, a->@.
constexpr const char* kTop5[] = {"S19", "S28", "S11", "S23", "S5"};

ReplacementRule from_row(const TableRow& row) {
    ReplacementRule r;
    r.id = row.id;
    std::string_view p = row.pairs;
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) r.pairs.push_back({p[i], p[i + 1]});
    return r;
}

unsigned char fold(char c) {
    return static_cast<unsigned char>(std::tolower(static_cast<unsigned char>(c)));
}

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// Characters a pair's source matches under the rule's case mode.
bool source_matches(const CharPair& p, bool case_insensitive, char c) {
    if (c == p.source) return true;
    return case_insensitive && is_alpha(p.source) && fold(c) == fold(p.source);
}

bool valid_rule_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return u >= 0x20 && u < 0x7f;
}

bool valid_id(std::string_view id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return u > 0x20 && u < 0x7f && c != ',';
    });
}

std::string_view trim_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

std::vector<CharPair> parse_pairs(std::string_view text, std::size_t line_no) {
    std::vector<CharPair> pairs;
    std::size_t pos = 0;
    while (true) {
        if (text.size() - pos < 3 || text[pos + 1] != '>')
            throw Error(Errc::malformed, "expected <source>><replacement> pair", line_no);
        pairs.push_back({text[pos], text[pos + 2]});
        pos += 3;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw Error(Errc::malformed, "expected ',' between pairs", line_no);
        ++pos;
    }
    return pairs;
}

std::vector<std::string> split_ids(std::string_view text) {
    std::vector<std::string> ids;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        if (end > start) ids.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return ids;
}

}  // namespace

const char* arity_name(Arity a) noexcept {
    switch (a) {
        case Arity::single: return "single";
        case Arity::dual: return "dual";
        case Arity::triad: return "triad";
    }
    return "?";
}

void validate_rule(const ReplacementRule& rule) {
    if (!valid_id(rule.id)) throw Error(Errc::malformed, "invalid rule id '" + rule.id + "'");
    if (rule.pairs.empty() || rule.pairs.size() > 3)
        throw Error(Errc::arity, "rule " + rule.id + " has " + std::to_string(rule.pairs.size()) +
                                     " pairs; expected 1 to 3");
    for (std::size_t i = 0; i < rule.pairs.size(); ++i) {
        const auto& p = rule.pairs[i];
        if (!valid_rule_char(p.source) || !valid_rule_char(p.replacement))
            throw Error(Errc::invalid_char, "rule " + rule.id + " uses a non-printable or non-ASCII character");
        if (source_matches(p, rule.case_insensitive, p.replacement))
            throw Error(Errc::malformed, "rule " + rule.id + " replaces a character with itself");
        for (std::size_t j = 0; j < i; ++j) {
            const auto& q = rule.pairs[j];
            if (source_matches(q, rule.case_insensitive, p.source) ||
                source_matches(p, rule.case_insensitive, q.source))
                throw Error(Errc::duplicate_source,
                            "rule " + rule.id + " repeats source '" + std::string(1, p.source) + "'");
        }
    }
}

void RuleSet::add(ReplacementRule rule) {
    validate_rule(rule);
    if (find(rule.id)) throw Error(Errc::duplicate_id, "duplicate rule id '" + rule.id + "'");
    rules_.push_back(std::move(rule));
}

void RuleSet::define_subset(std::string name, std::vector<std::string> ids) {
    if (name.empty() || name == "all" || name == "singles" || name == "duals" || name == "triads")
        throw Error(Errc::malformed, "reserved or empty subset name '" + name + "'");
    for (const auto& id : ids)
        if (!find(id)) throw Error(Errc::malformed, "subset " + name + " names unknown rule '" + id + "'");
    subsets_[std::move(name)] = std::move(ids);
}

const ReplacementRule* RuleSet::find(std::string_view id) const {
    for (const auto& r : rules_)
        if (r.id == id) return &r;
    return nullptr;
}

std::vector<const ReplacementRule*> RuleSet::by_arity(Arity a) const {
    std::vector<const ReplacementRule*> out;
    for (const auto& r : rules_)
        if (r.arity() == a) out.push_back(&r);
    return out;
}

std::vector<const ReplacementRule*> RuleSet::named(std::string_view name) const {
    if (name == "singles") return singles();
    if (name == "duals") return duals();
    if (name == "triads") return triads();
    std::vector<const ReplacementRule*> out;
    if (name == "all") {
        for (const auto& r : rules_) out.push_back(&r);
        return out;
    }
    auto it = subsets_.find(name);
    if (it == subsets_.end()) return out;
    for (const auto& id : it->second) out.push_back(find(id));
    return out;
}

bool RuleSet::has_subset(std::string_view name) const {
    return name == "all" || name == "singles" || name == "duals" || name == "triads" ||
           subsets_.find(name) != subsets_.end();
}

RuleSet RuleSet::subset(std::string_view name) const {
    if (!has_subset(name)) throw Error(Errc::malformed, "unknown rule subset '" + std::string(name) + "'");
    if (name == "all") return *this;
    RuleSet out;
    for (const auto* r : named(name)) out.add(*r);
    return out;
}

const RuleSet& builtin_rules() {
    static const RuleSet rs = [] {
        RuleSet s;
        for (const auto& row : kSingles) s.add(from_row(row));
        for (const auto& row : kDuals) s.add(from_row(row));
        for (const auto& row : kTriads) s.add(from_row(row));
        s.define_subset("top5", {std::begin(kTop5), std::end(kTop5)});
        return s;
    }();
    return rs;
}

RuleSet parse_rules(std::string_view text) {
    RuleSet rs;
    std::vector<std::pair<std::string, std::vector<std::string>>> subsets;
    std::vector<std::size_t> subset_lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = trim_cr(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;

        if (line.empty()) continue;
        if (line.front() == '#') {
            constexpr std::string_view kDirective = "#@subset ";
            if (line.substr(0, kDirective.size()) == kDirective) {
                auto rest = line.substr(kDirective.size());
                auto sp = rest.find(' ');
                if (sp == std::string_view::npos || sp == 0)
                    throw Error(Errc::malformed, "expected '#@subset <name> <ids>'", line_no);
                subsets.emplace_back(std::string(rest.substr(0, sp)), split_ids(rest.substr(sp + 1)));
                subset_lines.push_back(line_no);
            }
            continue;
        }

        ReplacementRule rule;
        auto tab = line.find('\t');
        std::string_view pairs_field;
        if (tab == std::string_view::npos) {
            rule.id = "R" + std::to_string(rs.size() + 1);
            pairs_field = line;
        } else {
            rule.id = std::string(line.substr(0, tab));
            auto rest = line.substr(tab + 1);
            auto tab2 = rest.find('\t');
            pairs_field = rest.substr(0, tab2);
            if (tab2 != std::string_view::npos) {
                auto flag = rest.substr(tab2 + 1);
                if (flag != "cs") throw Error(Errc::malformed, "unknown rule flag '" + std::string(flag) + "'", line_no);
                rule.case_insensitive = false;
            }
        }
        rule.pairs = parse_pairs(pairs_field, line_no);
        try {
            rs.add(std::move(rule));
        } catch (const Error& e) {
            throw Error(e.code(), e.what(), line_no);
        }
    }
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        try {
            rs.define_subset(std::move(subsets[i].first), std::move(subsets[i].second));
        } catch (const Error& e) {
            throw Error(e.code(), e.what(), subset_lines[i]);
        }
    }
    return rs;
}

std::string serialize_rules(const RuleSet& rs) {
    std::string out;
    for (const auto& r : rs.rules()) {
        out += r.id;
        out += '\t';
        for (std::size_t i = 0; i < r.pairs.size(); ++i) {
            if (i) out += ',';
            out += r.pairs[i].source;
            out += '>';
            out += r.pairs[i].replacement;
        }
        if (!r.case_insensitive) out += "\tcs";
        out += '\n';
    }
    for (const auto& [name, ids] : rs.explicit_subsets()) {
        out += "#@subset ";
        out += name;
        out += ' ';
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) out += ',';
            out += ids[i];
        }
        out += '\n';
    }
    return out;
}

std::vector<std::string> hashcat_tokens(const ReplacementRule& rule) {
    for (const auto& p : rule.pairs) {
        auto u = static_cast<unsigned char>(p.replacement);
        if (u <= 0x20 || u >= 0x7f)
            throw Error(Errc::unrepresentable,
                        "rule " + rule.id + ": replacement character cannot be written as a substitute token");
    }

    // A pair must run before any pair whose replacement it would otherwise
    // consume. Stable: the first pair with no pending dependency goes next.
    std::vector<CharPair> pending = rule.pairs;
    std::vector<CharPair> ordered;
    while (!pending.empty()) {
        auto ready = std::find_if(pending.begin(), pending.end(), [&](const CharPair& p) {
            return std::none_of(pending.begin(), pending.end(), [&](const CharPair& q) {
                return &q != &p && source_matches(q, rule.case_insensitive, p.replacement);
            });
        });
        if (ready == pending.end())
            throw Error(Errc::unrepresentable, "rule " + rule.id + " has cyclic replacements");
        ordered.push_back(*ready);
        pending.erase(ready);
    }

    std::vector<std::string> tokens;
    for (const auto& p : ordered) {
        if (rule.case_insensitive && is_alpha(p.source)) {
            auto lo = static_cast<char>(std::tolower(static_cast<unsigned char>(p.source)));
            auto up = static_cast<char>(std::toupper(static_cast<unsigned char>(p.source)));
            tokens.push_back({'s', lo, p.replacement});
            tokens.push_back({'s', up, p.replacement});
        } else {
            tokens.push_back({'s', p.source, p.replacement});
        }
    }
    return tokens;
}

std::string export_hashcat(const RuleSet& rs) {
    std::string out;
    for (const auto& r : rs.rules()) {
        auto tokens = hashcat_tokens(r);
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i) out += ' ';
            out += tokens[i];
        }
        out += '\n';
    }
    return out;
}

RuleSet load_rules_arg(std::string_view spec, std::string_view subset) {
    if (spec == "builtin") return builtin_rules().subset(subset);
    return parse_rules(read_file(std::string(spec))).subset(subset);
}

}  // namespace leetforge
