#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mds {

/// Reads a whole file and checks that it is UTF-8. Throws Error(Input) if
/// the file cannot be opened and Error(Data) naming the path otherwise.
std::string read_utf8_file(const std::filesystem::path& path);

/// Non-empty lines with surrounding whitespace trimmed; lines starting with
/// '#' are comments.
std::vector<std::string> content_lines(std::string_view text);

/// Hex-encoded SHA-256 digest.
std::string sha256_hex(std::string_view bytes);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

}  // namespace mds
