#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "leetforge/cracker.hpp"
#include "leetforge/error.hpp"
#include "oracle.hpp"

using namespace leetforge;

TEST_CASE("crack: p@ssw0rd is recovered through D1") {
    auto hs = HashStore::load(oracle::md5_hex("p@ssw0rd") + "\n", Algorithm::md5);
    auto cands = generate(make_wordlist({"password"}), builtin_rules(), {}).candidates;
    auto res = crack(hs, cands, Algorithm::md5, {.threads = 2});
    CHECK(res.recovered_new == 1);
    REQUIRE(res.matches.size() == 1);
    CHECK(res.matches[0].plaintext == "p@ssw0rd");
    CHECK(res.matches[0].base_word == "password");
    CHECK(res.matches[0].rule_id == "D1");
    CHECK(res.attempted == cands.size());
}

TEST_CASE("crack: empty stream") {
    auto hs = HashStore::load(oracle::md5_hex("x") + "\n", Algorithm::md5);
    auto res = crack(hs, {}, Algorithm::md5);
    CHECK(res.attempted == 0);
    CHECK(res.recovered_new == 0);
    CHECK(res.matches.empty());
}

TEST_CASE("crack: baseline of the synthetic fixture recovers the planted plain words") {
    auto s = fixtures::make_synthetic_bench();
    auto hs = HashStore::load(s.hash_text, Algorithm::md5);
    CHECK(hs.unique_count() == 200);
    auto res = crack(hs, base_candidates(make_wordlist(s.words)), Algorithm::md5);
    CHECK(res.recovered_new == 100);
    CHECK(res.attempted == 1000);
}

TEST_CASE("crack: soundness, completeness, monotonicity") {
    std::mt19937_64 rng(42);
    auto words = fixtures::random_words(rng, 300);
    auto cands = generate(make_wordlist(words), builtin_rules(), {.include_base = true}).candidates;
    std::string hashes;
    std::set<std::string> planted;
    for (std::size_t i = 0; i < cands.size(); i += 37) planted.insert(cands[i].candidate);
    for (int i = 0; i < 50; ++i) planted.insert("not-a-candidate-" + std::to_string(i));
    for (const auto& p : planted) hashes += oracle::md5_hex(p) + "\n";
    auto hs = HashStore::load(hashes, Algorithm::md5);

    auto res = crack(hs, cands, Algorithm::md5, {.threads = 4, .chunk_bytes = 512});
    // brute-force cross product
    std::set<std::string> expected;
    for (const auto& c : cands)
        for (const auto& p : planted)
            if (oracle::md5(c.candidate) == oracle::md5(p)) expected.insert(c.candidate);
    std::set<std::string> got;
    for (const auto& m : res.matches) {
        CHECK(oracle::md5(m.plaintext) == m.digest);
        CHECK(hs.contains(m.digest));
        got.insert(m.plaintext);
    }
    CHECK(got == expected);
    CHECK(res.recovered_new == expected.size());
    CHECK(std::is_sorted(res.matches.begin(), res.matches.end(),
                         [](const Match& a, const Match& b) { return a.digest < b.digest; }));

    auto again = crack(hs, cands, Algorithm::md5);
    CHECK(again.recovered_new == 0);
    CHECK(again.matches.size() == res.matches.size());
}

TEST_CASE("crack: duplicate candidates are all attempted, earliest provenance wins") {
    auto hs = HashStore::load(oracle::md5_hex("l0ss") + "\n", Algorithm::md5);
    std::vector<CandidateRecord> cands = {
        {"x", "x", "BASE"}, {"l0ss", "loss", "S28"}, {"l0ss", "l0ss", "BASE"}, {"y", "y", "BASE"}};
    for (unsigned t : {1u, 2u, 4u}) {
        auto fresh = HashStore::load(oracle::md5_hex("l0ss") + "\n", Algorithm::md5);
        auto res = crack(fresh, cands, Algorithm::md5, {.threads = t, .chunk_bytes = 1});
        CHECK(res.attempted == 4);
        REQUIRE(res.matches.size() == 1);
        CHECK(res.matches[0].rule_id == "S28");
    }
}

TEST_CASE("crack: 1 vs N workers give identical results") {
    std::mt19937_64 rng(8);
    auto words = fixtures::random_words(rng, 2000);
    auto cands = generate(make_wordlist(words), builtin_rules(), {.include_base = true}).candidates;
    std::string hashes;
    for (std::size_t i = 0; i < cands.size(); i += 11) hashes += oracle::md5_hex(cands[i].candidate) + "\n";
    auto one_store = HashStore::load(hashes, Algorithm::md5);
    auto n_store = HashStore::load(hashes, Algorithm::md5);
    auto one = crack(one_store, cands, Algorithm::md5, {.threads = 1});
    auto many = crack(n_store, cands, Algorithm::md5, {.threads = 8, .chunk_bytes = 4096});
    CHECK(one.attempted == many.attempted);
    CHECK(one.recovered_new == many.recovered_new);
    CHECK(one.matches == many.matches);
    CHECK(one_store.potfile() == n_store.potfile());
}

TEST_CASE("Cracker: batches behave like one stream") {
    auto s = fixtures::make_synthetic_bench(7);
    auto cands = generate(make_wordlist(s.words), builtin_rules(), {.include_base = true}).candidates;
    auto whole_store = HashStore::load(s.hash_text, Algorithm::md5);
    auto whole = crack(whole_store, cands, Algorithm::md5);

    auto batched_store = HashStore::load(s.hash_text, Algorithm::md5);
    Cracker c(batched_store, Algorithm::md5, {.threads = 3});
    std::span<const CandidateRecord> all(cands);
    for (std::size_t i = 0; i < all.size(); i += 1000) c.feed(all.subspan(i, std::min<std::size_t>(1000, all.size() - i)));
    auto batched = c.finish();
    CHECK(batched.attempted == whole.attempted);
    CHECK(batched.matches == whole.matches);
    CHECK(batched.recovered_new == 200);
}

TEST_CASE("resolve_threads") {
    CHECK(resolve_threads(3) == 3);
    CHECK(resolve_threads(0) >= 1);
}
