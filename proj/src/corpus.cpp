#include "leetforge/corpus.hpp"

#include <unordered_set>

#include "leetforge/error.hpp"
#include "leetforge/io.hpp"

namespace leetforge {

std::size_t find_invalid_utf8(std::string_view s) noexcept {
    std::size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        std::size_t len;
        std::uint32_t cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xe0) == 0xc0) {
            len = 2;
            cp = c & 0x1f;
        } else if ((c & 0xf0) == 0xe0) {
            len = 3;
            cp = c & 0x0f;
        } else if ((c & 0xf8) == 0xf0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return i;
        }
        if (i + len > s.size()) return i;
        for (std::size_t k = 1; k < len; ++k) {
            auto cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xc0) != 0x80) return i;
            cp = (cp << 6) | (cc & 0x3f);
        }
        // Overlong forms, surrogates, out of range.
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
            cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff))
            return i;
        i += len;
    }
    return std::string_view::npos;
}

WordList load_wordlists(const std::vector<WordSource>& inputs) {
    WordList wl;
    std::unordered_set<std::string_view> seen;
    for (const auto& src : inputs) {
        SourceCount count{src.name, 0};
        std::string_view text = src.text;
        std::size_t pos = 0;
        std::size_t line_no = 0;
        while (pos < text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            auto line = text.substr(pos, nl - pos);
            pos = nl + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.empty()) continue;
            if (find_invalid_utf8(line) != std::string_view::npos)
                throw Error(Errc::invalid_utf8, "invalid UTF-8 in source '" + src.name + "'", line_no);
            ++count.raw_count;
            if (seen.contains(line)) continue;
            wl.words.emplace_back(line);
            seen.insert(line);
        }
        wl.sources.push_back(std::move(count));
    }
    return wl;
}

WordList load_wordlist_files(const std::vector<std::string>& paths) {
    std::vector<std::string> texts;
    texts.reserve(paths.size());
    for (const auto& p : paths) texts.push_back(read_file(p));
    std::vector<WordSource> inputs;
    for (std::size_t i = 0; i < paths.size(); ++i) inputs.push_back({base_name(paths[i]), texts[i]});
    return load_wordlists(inputs);
}

WordList make_wordlist(const std::vector<std::string>& words) {
    std::string text;
    for (const auto& w : words) {
        text += w;
        text += '\n';
    }
    return load_wordlists({{"memory", text}});
}

CorpusStats corpus_stats(const WordList& wl) {
    CorpusStats st;
    st.sources = wl.sources;
    for (const auto& s : wl.sources) st.total += s.raw_count;
    st.unique = wl.words.size();
    return st;
}

}  // namespace leetforge
