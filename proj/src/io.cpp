#include "leetforge/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "leetforge/error.hpp"

namespace leetforge {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(Errc::io, "read failed for '" + path + "'");
    return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io, "cannot write '" + path + "'");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error(Errc::io, "write failed for '" + path + "'");
}

std::string base_name(std::string_view path) {
    return std::filesystem::path(path).filename().string();
}

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::malformed: return "malformed";
        case Errc::duplicate_id: return "duplicate-id";
        case Errc::arity: return "arity";
        case Errc::duplicate_source: return "duplicate-source";
        case Errc::invalid_char: return "invalid-char";
        case Errc::unrepresentable: return "unrepresentable";
        case Errc::invalid_utf8: return "invalid-utf8";
        case Errc::unknown_algorithm: return "unknown-algorithm";
        case Errc::width_mismatch: return "width-mismatch";
        case Errc::not_in_store: return "not-in-store";
        case Errc::digest_mismatch: return "digest-mismatch";
        case Errc::io: return "io";
    }
    return "unknown";
}

}  // namespace leetforge
