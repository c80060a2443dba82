#pragma once

#include <string>
#include <string_view>

namespace leetforge {

/// Whole-file read. Throws Error(Errc::io) when the file cannot be opened.
std::string read_file(const std::string& path);

void write_file(const std::string& path, std::string_view data);

/// File name component of a path ("dir/en.txt" -> "en.txt").
std::string base_name(std::string_view path);

}  // namespace leetforge
