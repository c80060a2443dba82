#pragma once

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leetforge/rules.hpp"
#include "oracle.hpp"

namespace fixtures {

struct TableEntry {
    const char* id;
    std::vector<std::pair<char, char>> pairs;
};

// Replacement tables transcribed row by row.
inline const std::vector<TableEntry>& table_rows() {
    static const std::vector<TableEntry> t = {
        {"S1", {{'a', '0'}}}, {"S2", {{'a', '1'}}}, {"S3", {{'a', '4'}}}, {"S4", {{'a', '8'}}},
        {"S5", {{'a', '@'}}}, {"S6", {{'b', '3'}}}, {"S7", {{'b', '6'}}}, {"S8", {{'b', '8'}}},
        {"S9", {{'d', '0'}}}, {"S10", {{'e', '0'}}}, {"S11", {{'e', '3'}}}, {"S12", {{'e', '5'}}},
        {"S13", {{'e', '8'}}}, {"S14", {{'f', '4'}}}, {"S15", {{'g', '6'}}}, {"S16", {{'g', '9'}}},
        {"S17", {{'h', '1'}}}, {"S18", {{'h', '7'}}}, {"S19", {{'i', '1'}}}, {"S20", {{'i', '7'}}},
        {"S21", {{'i', '8'}}}, {"S22", {{'i', '!'}}}, {"S23", {{'l', '1'}}}, {"S24", {{'l', '7'}}},
        {"S25", {{'l', ';'}}}, {"S26", {{'l', '!'}}}, {"S27", {{'m', ','}}}, {"S28", {{'o', '0'}}},
        {"S29", {{'o', '3'}}}, {"S30", {{'o', '@'}}}, {"S31", {{'r', '.'}}}, {"S32", {{'s', '1'}}},
        {"S33", {{'s', '2'}}}, {"S34", {{'s', '3'}}}, {"S35", {{'s', '4'}}}, {"S36", {{'s', '5'}}},
        {"S37", {{'s', '6'}}}, {"S38", {{'s', '8'}}}, {"S39", {{'s', '$'}}}, {"S40", {{'t', '7'}}},
        {"S41", {{'t', '8'}}}, {"S42", {{'v', '7'}}}, {"S43", {{'z', '?'}}},
        {"D1", {{'a', '@'}, {'o', '0'}}}, {"D2", {{'a', '@'}, {'i', '1'}}}, {"D3", {{'a', '@'}, {'l', '1'}}},
        {"D4", {{'a', '@'}, {'e', '3'}}}, {"D5", {{'i', '1'}, {'o', '0'}}}, {"D6", {{'i', '1'}, {'e', '3'}}},
        {"D7", {{'o', '0'}, {'e', '3'}}}, {"D8", {{'o', '0'}, {'l', '1'}}}, {"D9", {{'l', '1'}, {'e', '3'}}},
        {"T1", {{'a', '@'}, {'o', '0'}, {'i', '1'}}}, {"T2", {{'a', '@'}, {'o', '0'}, {'l', '1'}}},
        {"T3", {{'a', '@'}, {'o', '0'}, {'e', '3'}}}, {"T4", {{'a', '@'}, {'l', '1'}, {'e', '3'}}},
        {"T5", {{'a', '@'}, {'i', '1'}, {'e', '3'}}}, {"T6", {{'i', '1'}, {'o', '0'}, {'e', '3'}}},
        {"T7", {{'l', '1'}, {'o', '0'}, {'e', '3'}}}, {"T8", {{'s', '$'}, {'l', '!'}, {'o', '@'}}},
        {"T9", {{'s', '$'}, {'i', '!'}, {'o', '@'}}}, {"T10", {{'s', '$'}, {'l', '!'}, {'a', '@'}}},
        {"T11", {{'s', '$'}, {'i', '!'}, {'a', '@'}}}, {"T12", {{'b', '6'}, {'g', '9'}, {'l', '1'}}},
        {"T13", {{'b', '6'}, {'g', '9'}, {'s', '5'}}}, {"T14", {{'g', '9'}, {'l', '1'}, {'s', '5'}}},
        {"T15", {{'b', '6'}, {'l', '1'}, {'s', '5'}}},
    };
    return t;
}

// Top-5 pairs in table order.
inline const std::vector<std::pair<char, char>>& top5_pairs() {
    static const std::vector<std::pair<char, char>> t = {{'i', '1'}, {'o', '0'}, {'e', '3'}, {'l', '1'}, {'a', '@'}};
    return t;
}

struct Example {
    const char* rule_id;
    const char* base;
    const char* mangled;
};

// Every legible (base, result) example consistent with replace-all.
inline const std::vector<Example>& table_examples() {
    static const std::vector<Example> t = {
        {"S1", "stranger", "str0nger"},   {"S1", "flappy", "fl0ppy"},       {"S2", "snatch", "sn1tch"},
        {"S3", "dragon", "dr4gon"},       {"S3", "brandon", "br4ndon"},     {"S4", "creative", "cre8tive"},
        {"S4", "SKATER", "SK8TER"},       {"S5", "Dragon", "Dr@gon"},       {"S5", "theater", "the@ter"},
        {"S6", "numbers", "num3ers"},     {"S7", "rabbit", "ra66it"},       
        {"S8", "rebecca", "re8ecca"},     {"S12", "maverick", "mav5rick"},  {"S13", "dayless", "dayl8ss"},
        {"S14", "california", "cali4ornia"}, {"S14", "thefts", "the4ts"},  {"S15", "maggie", "ma66ie"},
        {"S15", "tigger", "ti66er"},      {"S16", "tigger", "ti99er"},      {"S18", "mohamed", "mo7amed"},
        {"S19", "trinity", "tr1n1ty"},    {"S20", "princess", "pr7ncess"},  {"S21", "skier", "sk8er"},
        {"S22", "jessica", "jess!ca"},    {"S24", "melissa", "me7issa"},    {"S25", "chelsea", "che;sea"},
        {"S25", "hollywood", "ho;;ywood"}, {"S27", "james", "ja,es"},       {"S28", "people", "pe0ple"},
        {"S28", "victoria", "vict0ria"},  {"S29", "choose", "ch33se"},      {"S30", "password", "passw@rd"},
        {"S33", "password", "pa22word"},  {"S34", "password", "pa33word"},  {"S36", "cassie", "ca55ie"},
        {"S36", "monster", "mon5ter"},    {"S37", "password", "pa66word"},  {"S38", "password", "pa88word"},
        {"S39", "jessica", "je$$ica"},    {"S39", "Password", "Pa$$word"},  {"S40", "Matthew", "Ma77hew"},
        {"S42", "Seven", "Se7en"},
        // Top-5 table
        {"S19", "monika", "mon1ka"},      {"S19", "cookies", "cook1es"},    {"S19", "falling", "fall1ng"},
        {"S28", "veronica", "ver0nica"},  {"S28", "memories", "mem0ries"},  {"S11", "haters", "hat3rs"},
        {"S11", "spiderman", "spid3rman"}, {"S11", "stella", "st3lla"},     {"S23", "carlos", "car1os"},
        {"S5", "tiffany", "tiff@ny"},     {"S5", "sparky", "sp@rky"},
    };
    return t;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len,
                               std::string_view alphabet = "abcdefghijklmnopqrstuvwxyz") {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string w(len(rng), ' ');
    for (auto& c : w) c = alphabet[pick(rng)];
    return w;
}

inline std::vector<std::string> random_words(std::mt19937_64& rng, std::size_t n, std::size_t min_len = 3,
                                             std::size_t max_len = 10) {
    std::set<std::string> seen;
    std::vector<std::string> out;
    while (out.size() < n) {
        auto w = random_word(rng, min_len, max_len);
        if (seen.insert(w).second) out.push_back(w);
    }
    return out;
}

/// 1,000 words with 100 plain and 100 rule-mangled words planted as MD5
/// digests (OpenSSL). The hash text repeats a few lines so raw > unique.
struct SyntheticBench {
    std::vector<std::string> words;
    std::vector<std::string> planted_plain;
    std::vector<std::string> planted_mangled;
    std::string hash_text;
    std::size_t hash_lines = 0;
};

inline SyntheticBench make_synthetic_bench(std::uint64_t seed = 2024) {
    std::mt19937_64 rng(seed);
    SyntheticBench s;
    s.words = random_words(rng, 1000, 5, 10);
    std::set<std::string> word_set(s.words.begin(), s.words.end());
    const auto& rs = leetforge::builtin_rules();

    for (std::size_t i = 0; i < 100; ++i) s.planted_plain.push_back(s.words[i]);
    std::set<std::string> mangled;
    std::uniform_int_distribution<std::size_t> pick_rule(0, rs.size() - 1);
    for (std::size_t i = 100; mangled.size() < 100; ++i) {
        for (int attempt = 0; attempt < 50; ++attempt) {
            auto m = oracle::apply(s.words[i], rs[pick_rule(rng)]);
            if (m && !word_set.contains(*m) && mangled.insert(*m).second) {
                s.planted_mangled.push_back(*m);
                break;
            }
        }
    }
    for (const auto& w : s.planted_plain) s.hash_text += oracle::md5_hex(w) + "\n";
    for (const auto& m : s.planted_mangled) s.hash_text += oracle::md5_hex(m) + "\n";
    // duplicates and an uppercase line
    for (std::size_t i = 0; i < 10; ++i) s.hash_text += oracle::md5_hex(s.planted_plain[i]) + "\n";
    std::string upper = oracle::md5_hex(s.planted_mangled[0]);
    for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    s.hash_text += upper + "\n";
    s.hash_lines = 211;
    return s;
}

}  // namespace fixtures
