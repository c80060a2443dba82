#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leetforge {

struct SourceCount {
    std::string name;
    std::uint64_t raw_count = 0;

    friend bool operator==(const SourceCount&, const SourceCount&) = default;
};

/// Deduplicated words in first-occurrence order, plus the raw (pre-dedup)
/// line count of every source.
struct WordList {
    std::vector<std::string> words;
    std::vector<SourceCount> sources;

    std::size_t size() const noexcept { return words.size(); }
    bool empty() const noexcept { return words.empty(); }
};

struct WordSource {
    std::string name;
    std::string_view text;
};

/// Concatenates sources in order, dropping blank lines and repeated words.
/// Words are compared byte-exact; only a trailing CR is stripped. Throws
/// Error(Errc::invalid_utf8) naming the source and line.
WordList load_wordlists(const std::vector<WordSource>& inputs);

/// Reads each file as a source named after its file name.
WordList load_wordlist_files(const std::vector<std::string>& paths);

/// Plain in-memory word vector, deduplicated (no per-source bookkeeping
/// beyond a single "memory" source).
WordList make_wordlist(const std::vector<std::string>& words);

struct CorpusStats {
    std::vector<SourceCount> sources;
    std::uint64_t total = 0;   // sum of raw counts, before dedup
    std::uint64_t unique = 0;  // words after cross-source dedup
};

CorpusStats corpus_stats(const WordList& wl);

/// Index of the first byte that starts an invalid UTF-8 sequence, or
/// npos when the whole string is valid.
std::size_t find_invalid_utf8(std::string_view s) noexcept;

}  // namespace leetforge
