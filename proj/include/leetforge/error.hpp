#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leetforge {

enum class Errc {
    malformed,
    duplicate_id,
    arity,
    duplicate_source,
    invalid_char,
    unrepresentable,
    invalid_utf8,
    unknown_algorithm,
    width_mismatch,
    not_in_store,
    digest_mismatch,
    io,
};

const char* errc_name(Errc code) noexcept;

/// Library error. `line()` is 1-based when the error refers to a line of
/// input text, 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
          code_(code),
          line_(line) {}

    Errc code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

    /// True for errors caused by malformed user input rather than runtime state.
    bool is_input_error() const noexcept {
        switch (code_) {
            case Errc::not_in_store:
            case Errc::digest_mismatch:
                return false;
            default:
                return true;
        }
    }

private:
    Errc code_;
    std::size_t line_;
};

}  // namespace leetforge
