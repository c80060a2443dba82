#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leetforge/digest.hpp"
#include "leetforge/generator.hpp"
#include "leetforge/hashstore.hpp"

namespace leetforge {

struct CrackOptions {
    unsigned threads = 0;                 // 0 = hardware concurrency
    std::size_t chunk_bytes = 64 * 1024;  // candidate text per work unit
};

struct Match {
    Digest digest{};
    std::string plaintext;
    std::string base_word;
    std::string rule_id;

    friend bool operator==(const Match&, const Match&) = default;
};

struct CrackResult {
    std::uint64_t attempted = 0;
    std::uint64_t recovered_new = 0;
    std::vector<Match> matches;  // one per digest hit, sorted by digest
    double elapsed_seconds = 0.0;
    double throughput = 0.0;  // candidates per second
};

/// Effective worker count: `requested`, else LEETFORGE_THREADS, else the
/// hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Incremental crack over a candidate stream fed in batches.
///
/// Each digest hit is attributed to the earliest candidate (in feed order)
/// that produced it, so the result does not depend on the worker count or
/// on scheduling. Store marking happens in finish(), in digest order.
class Cracker {
public:
    Cracker(HashStore& store, Algorithm algorithm, CrackOptions opts = {});

    void feed(std::span<const CandidateRecord> batch);
    CrackResult finish();

private:
    struct Hit {
        std::size_t digest_index;
        std::uint64_t sequence;
        Match match;
    };

    HashStore& store_;
    Algorithm algorithm_;
    CrackOptions opts_;
    unsigned threads_;
    std::uint64_t attempted_ = 0;
    std::vector<Hit> hits_;
    double elapsed_ = 0.0;
};

/// Hashes every candidate once and marks hits in `store`.
/// Throws Error(Errc::unknown_algorithm) when `algorithm` differs from the
/// store's.
CrackResult crack(HashStore& store, std::span<const CandidateRecord> candidates, Algorithm algorithm,
                  CrackOptions opts = {});

}  // namespace leetforge
