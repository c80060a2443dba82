#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace leetforge {

enum class Algorithm { md5 };

/// Raw digest bytes. Sized for the widest supported algorithm; currently
/// only MD5 (16 bytes).
using Digest = std::array<std::uint8_t, 16>;

Algorithm parse_algorithm(std::string_view name);
const char* algorithm_name(Algorithm a) noexcept;
std::size_t digest_width(Algorithm a) noexcept;

/// MD5 (RFC 1321) of the exact bytes.
Digest md5(std::string_view data) noexcept;

Digest digest_of(std::string_view plaintext, Algorithm a);

std::string to_hex(const Digest& d);

/// Lower- or uppercase hex of exactly `digest_width(a)` bytes. Returns false
/// on bad length or non-hex characters.
bool parse_hex(std::string_view hex, Algorithm a, Digest& out) noexcept;

}  // namespace leetforge
