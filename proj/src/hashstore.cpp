#include "leetforge/hashstore.hpp"

#include <algorithm>

#include "leetforge/error.hpp"

namespace leetforge {
namespace {

std::uint32_t bucket_of(const Digest& d) { return std::uint32_t(d[0]) << 8 | d[1]; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

HashStore::HashStore(Algorithm a) : algorithm_(a), mutex_(std::make_unique<std::mutex>()) { build_index(); }

HashStore HashStore::load(std::string_view text, Algorithm a) {
    std::vector<Digest> digests;
    std::uint64_t raw = 0;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty()) continue;
        Digest d;
        if (!parse_hex(line, a, d))
            throw Error(Errc::malformed,
                        "expected " + std::to_string(2 * digest_width(a)) + " hex characters for " +
                            algorithm_name(a),
                        line_no);
        digests.push_back(d);
        ++raw;
    }
    HashStore hs = from_digests(std::move(digests), a);
    hs.raw_count_ = raw;
    return hs;
}

HashStore HashStore::from_digests(std::vector<Digest> digests, Algorithm a) {
    HashStore hs(a);
    hs.raw_count_ = digests.size();
    std::sort(digests.begin(), digests.end());
    digests.erase(std::unique(digests.begin(), digests.end()), digests.end());
    hs.digests_ = std::move(digests);
    hs.plaintexts_.assign(hs.digests_.size(), std::nullopt);
    hs.build_index();
    return hs;
}

void HashStore::build_index() {
    bucket_start_.assign(65537, 0);
    for (const auto& d : digests_) ++bucket_start_[bucket_of(d) + 1];
    for (std::size_t i = 1; i < bucket_start_.size(); ++i) bucket_start_[i] += bucket_start_[i - 1];
}

std::optional<std::size_t> HashStore::index_of(const Digest& d) const noexcept {
    auto b = bucket_of(d);
    auto first = digests_.begin() + bucket_start_[b];
    auto last = digests_.begin() + bucket_start_[b + 1];
    auto it = std::lower_bound(first, last, d);
    if (it == last || *it != d) return std::nullopt;
    return static_cast<std::size_t>(it - digests_.begin());
}

bool HashStore::contains(std::span<const std::uint8_t> raw) const {
    if (raw.size() != digest_width(algorithm_))
        throw Error(Errc::width_mismatch, "digest has " + std::to_string(raw.size()) + " bytes; store expects " +
                                              std::to_string(digest_width(algorithm_)));
    Digest d{};
    std::copy(raw.begin(), raw.end(), d.begin());
    return contains(d);
}

bool HashStore::mark_recovered(const Digest& d, std::string_view plaintext) {
    auto idx = index_of(d);
    if (!idx) throw Error(Errc::not_in_store, "digest " + to_hex(d) + " is not in the store");
    if (digest_of(plaintext, algorithm_) != d)
        throw Error(Errc::digest_mismatch, "plaintext does not hash to " + to_hex(d));
    return mark_at(*idx, plaintext);
}

bool HashStore::mark_at(std::size_t index, std::string_view plaintext) {
    std::lock_guard lock(*mutex_);
    if (plaintexts_[index]) return false;
    plaintexts_[index].emplace(plaintext);
    ++recovered_count_;
    return true;
}

std::uint64_t HashStore::recovered_count() const {
    std::lock_guard lock(*mutex_);
    return recovered_count_;
}

bool HashStore::is_recovered(const Digest& d) const {
    auto idx = index_of(d);
    if (!idx) return false;
    std::lock_guard lock(*mutex_);
    return plaintexts_[*idx].has_value();
}

std::optional<std::string> HashStore::plaintext(const Digest& d) const {
    auto idx = index_of(d);
    if (!idx) return std::nullopt;
    std::lock_guard lock(*mutex_);
    return plaintexts_[*idx];
}

std::vector<std::pair<Digest, std::string>> HashStore::recovered() const {
    std::lock_guard lock(*mutex_);
    std::vector<std::pair<Digest, std::string>> out;
    out.reserve(recovered_count_);
    for (std::size_t i = 0; i < digests_.size(); ++i)
        if (plaintexts_[i]) out.emplace_back(digests_[i], *plaintexts_[i]);
    return out;
}

std::string HashStore::potfile() const {
    std::string out;
    for (const auto& [d, p] : recovered()) {
        out += to_hex(d);
        out += ':';
        out += p;
        out += '\n';
    }
    return out;
}

}  // namespace leetforge
