#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leetforge/digest.hpp"

namespace leetforge {

/// Deduplicated set of target digests with first-wins recovery marking.
///
/// The digest set is immutable after load and may be queried from any
/// number of threads. mark_recovered() is internally synchronized.
class HashStore {
public:
    explicit HashStore(Algorithm a = Algorithm::md5);

    /// Parses one hex digest per non-blank line. Throws Error(Errc::malformed)
    /// with the offending line number.
    static HashStore load(std::string_view text, Algorithm a);
    static HashStore from_digests(std::vector<Digest> digests, Algorithm a);

    HashStore(HashStore&&) noexcept = default;
    HashStore& operator=(HashStore&&) noexcept = default;

    Algorithm algorithm() const noexcept { return algorithm_; }
    std::uint64_t raw_count() const noexcept { return raw_count_; }
    std::uint64_t unique_count() const noexcept { return digests_.size(); }
    std::uint64_t recovered_count() const;

    bool contains(const Digest& d) const noexcept { return index_of(d).has_value(); }
    /// Width-checked lookup on raw bytes. Throws Error(Errc::width_mismatch).
    bool contains(std::span<const std::uint8_t> raw) const;

    std::optional<std::size_t> index_of(const Digest& d) const noexcept;

    /// Records `plaintext` for `d`. True when newly recovered, false when the
    /// digest already had a plaintext. Throws Error(Errc::not_in_store) or
    /// Error(Errc::digest_mismatch).
    bool mark_recovered(const Digest& d, std::string_view plaintext);

    bool is_recovered(const Digest& d) const;
    std::optional<std::string> plaintext(const Digest& d) const;

    /// (digest, plaintext) pairs sorted by digest.
    std::vector<std::pair<Digest, std::string>> recovered() const;

    /// `hexdigest:plaintext` lines, lowercase hex, sorted by digest.
    std::string potfile() const;

    std::span<const Digest> digests() const noexcept { return digests_; }

private:
    void build_index();
    bool mark_at(std::size_t index, std::string_view plaintext);

    Algorithm algorithm_;
    std::uint64_t raw_count_ = 0;
    std::vector<Digest> digests_;             // sorted, unique
    std::vector<std::uint32_t> bucket_start_;  // by leading 16 bits
    std::vector<std::optional<std::string>> plaintexts_;
    std::uint64_t recovered_count_ = 0;
    std::unique_ptr<std::mutex> mutex_;

    friend class Cracker;
};

}  // namespace leetforge
