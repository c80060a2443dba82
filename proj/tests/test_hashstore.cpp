#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "leetforge/error.hpp"
#include "leetforge/hashstore.hpp"
#include "oracle.hpp"

using namespace leetforge;

namespace {

Errc load_error(std::string_view text, std::size_t* line = nullptr) {
    try {
        HashStore::load(text, Algorithm::md5);
    } catch (const Error& e) {
        if (line) *line = e.line();
        return e.code();
    }
    FAIL("expected error");
    return Errc::io;
}

}  // namespace

TEST_CASE("load_hashes: dedup and counts") {
    auto a = oracle::md5_hex("a"), b = oracle::md5_hex("b");
    auto hs = HashStore::load(a + "\n" + b + "\n\n" + a + "\n", Algorithm::md5);
    CHECK(hs.raw_count() == 3);
    CHECK(hs.unique_count() == 2);
    CHECK(hs.recovered_count() == 0);

    std::string upper = a;
    std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
    auto mixed = HashStore::load(a + "\r\n" + upper + "\n", Algorithm::md5);
    CHECK(mixed.unique_count() == 1);
}

TEST_CASE("load_hashes: malformed lines") {
    std::size_t line = 0;
    CHECK(load_error(oracle::md5_hex("x") + "\n" + std::string(32, 'z') + "\n", &line) == Errc::malformed);
    CHECK(line == 2);
    CHECK(load_error("abc\n") == Errc::malformed);
    CHECK(load_error(oracle::md5_hex("x") + "00\n") == Errc::malformed);
}

TEST_CASE("contains") {
    auto d1 = oracle::md5("d1"), d2 = oracle::md5("d2");
    auto hs = HashStore::from_digests({d1}, Algorithm::md5);
    CHECK(hs.contains(d1));
    CHECK_FALSE(hs.contains(d2));
    std::vector<std::uint8_t> shorty(8);
    CHECK_THROWS_AS(hs.contains(std::span<const std::uint8_t>(shorty)), Error);
    CHECK(hs.contains(std::span<const std::uint8_t>(d1.data(), d1.size())));
}

TEST_CASE("contains agrees with a linear scan") {
    std::mt19937_64 rng(17);
    std::vector<Digest> stored;
    for (int i = 0; i < 1000; ++i) {
        Digest d;
        for (auto& b : d) b = static_cast<std::uint8_t>(rng());
        // share prefixes so buckets are exercised
        if (i % 4 == 0 && !stored.empty()) {
            d[0] = stored.back()[0];
            d[1] = stored.back()[1];
        }
        stored.push_back(d);
    }
    auto hs = HashStore::from_digests(stored, Algorithm::md5);
    for (int q = 0; q < 10000; ++q) {
        Digest d;
        if (q % 2) {
            d = stored[rng() % stored.size()];
        } else {
            for (auto& b : d) b = static_cast<std::uint8_t>(rng());
            if (q % 4 == 0) d[0] = stored[q % stored.size()][0];
        }
        bool linear = std::find(stored.begin(), stored.end(), d) != stored.end();
        CHECK(hs.contains(d) == linear);
    }
}

TEST_CASE("ingest is order-insensitive") {
    std::vector<std::string> lines;
    for (int i = 0; i < 50; ++i) lines.push_back(oracle::md5_hex(std::to_string(i % 30)));
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& l : v) s += l + "\n";
        return s;
    };
    auto a = HashStore::load(join(lines), Algorithm::md5);
    std::mt19937_64 rng(1);
    std::shuffle(lines.begin(), lines.end(), rng);
    auto b = HashStore::load(join(lines), Algorithm::md5);
    CHECK(std::equal(a.digests().begin(), a.digests().end(), b.digests().begin(), b.digests().end()));
    CHECK(a.unique_count() == 30);
}

TEST_CASE("mark_recovered") {
    auto d = oracle::md5("secret");
    auto hs = HashStore::from_digests({d, oracle::md5("other")}, Algorithm::md5);
    CHECK(hs.mark_recovered(d, "secret"));
    CHECK_FALSE(hs.mark_recovered(d, "secret"));
    CHECK(hs.recovered_count() == 1);
    CHECK(hs.plaintext(d) == "secret");
    CHECK(hs.unique_count() == 2);

    try {
        hs.mark_recovered(oracle::md5("absent"), "absent");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_in_store);
    }
    try {
        hs.mark_recovered(oracle::md5("other"), "wrong");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::digest_mismatch);
    }
    CHECK(hs.potfile() == oracle::md5_hex("secret") + ":secret\n");
}

TEST_CASE("mark_recovered is first-wins under concurrency") {
    std::vector<std::string> words;
    std::vector<Digest> ds;
    for (int i = 0; i < 200; ++i) {
        words.push_back("w" + std::to_string(i));
        ds.push_back(oracle::md5(words.back()));
    }
    auto hs = HashStore::from_digests(ds, Algorithm::md5);
    std::atomic<int> wins{0};
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 8; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = 0; i < words.size(); ++i)
                    if (hs.mark_recovered(ds[i], words[i])) ++wins;
            });
    }
    CHECK(wins == 200);
    CHECK(hs.recovered_count() == 200);
    CHECK(hs.recovered_count() <= hs.unique_count());
    CHECK(hs.unique_count() <= hs.raw_count());
}

TEST_CASE("potfile is sorted by digest") {
    std::vector<Digest> ds;
    std::vector<std::string> words = {"z", "y", "x", "w", "v"};
    for (const auto& w : words) ds.push_back(oracle::md5(w));
    auto hs = HashStore::from_digests(ds, Algorithm::md5);
    for (const auto& w : words) hs.mark_recovered(oracle::md5(w), w);
    auto lines = oracle::lines(hs.potfile());
    REQUIRE(lines.size() == 5);
    CHECK(std::is_sorted(lines.begin(), lines.end()));
}
