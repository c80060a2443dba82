#include "leetforge/cracker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "leetforge/error.hpp"

namespace leetforge {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LEETFORGE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Cracker::Cracker(HashStore& store, Algorithm algorithm, CrackOptions opts)
    : store_(store), algorithm_(algorithm), opts_(opts), threads_(resolve_threads(opts.threads)) {
    if (store.algorithm() != algorithm)
        throw Error(Errc::unknown_algorithm, std::string("store holds ") + algorithm_name(store.algorithm()) +
                                                 " digests; requested " + algorithm_name(algorithm));
    if (opts_.chunk_bytes == 0) opts_.chunk_bytes = 1;
}

void Cracker::feed(std::span<const CandidateRecord> batch) {
    if (batch.empty()) return;
    auto t0 = std::chrono::steady_clock::now();

    std::vector<std::size_t> bounds{0};
    std::size_t acc = 0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        acc += batch[i].candidate.size() + 1;
        if (acc >= opts_.chunk_bytes) {
            bounds.push_back(i + 1);
            acc = 0;
        }
    }
    if (bounds.back() != batch.size()) bounds.push_back(batch.size());
    std::size_t chunks = bounds.size() - 1;

    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads_, chunks));
    std::vector<std::vector<Hit>> local(workers);
    std::atomic<std::size_t> next{0};
    const std::uint64_t base_seq = attempted_;

    auto work = [&](unsigned w) {
        auto& out = local[w];
        for (std::size_t c = next++; c < chunks; c = next++) {
            for (std::size_t i = bounds[c]; i < bounds[c + 1]; ++i) {
                const auto& rec = batch[i];
                auto d = digest_of(rec.candidate, algorithm_);
                if (auto idx = store_.index_of(d))
                    out.push_back({*idx, base_seq + i, {d, rec.candidate, rec.base_word, rec.rule_id}});
            }
        }
    };

    if (workers <= 1) {
        local.resize(1);
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    for (auto& l : local) std::move(l.begin(), l.end(), std::back_inserter(hits_));
    attempted_ += batch.size();
    elapsed_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CrackResult Cracker::finish() {
    auto t0 = std::chrono::steady_clock::now();
    std::sort(hits_.begin(), hits_.end(), [](const Hit& a, const Hit& b) {
        return a.digest_index != b.digest_index ? a.digest_index < b.digest_index : a.sequence < b.sequence;
    });

    CrackResult res;
    res.attempted = attempted_;
    for (std::size_t i = 0; i < hits_.size(); ++i) {
        if (i > 0 && hits_[i].digest_index == hits_[i - 1].digest_index) continue;
        auto& hit = hits_[i];
        if (store_.mark_at(hit.digest_index, hit.match.plaintext)) ++res.recovered_new;
        res.matches.push_back(std::move(hit.match));
    }
    hits_.clear();
    attempted_ = 0;

    elapsed_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.elapsed_seconds = elapsed_;
    res.throughput = elapsed_ > 0 ? static_cast<double>(res.attempted) / elapsed_ : 0.0;
    elapsed_ = 0.0;
    return res;
}

CrackResult crack(HashStore& store, std::span<const CandidateRecord> candidates, Algorithm algorithm,
                  CrackOptions opts) {
    Cracker c(store, algorithm, opts);
    c.feed(candidates);
    return c.finish();
}

}  // namespace leetforge
