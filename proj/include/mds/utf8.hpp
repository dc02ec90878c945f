#pragma once

#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 helpers. Case folding and character classes cover ASCII,
// Latin-1 Supplement and Latin Extended-A, which is what Portuguese and
// English text needs.
namespace mds::utf8 {

bool is_valid(std::string_view bytes);

/// Decodes valid UTF-8. Behaviour on invalid input is unspecified; call
/// is_valid first.
std::u32string decode(std::string_view bytes);
std::string encode(std::u32string_view cps);

char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view bytes);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_space(char32_t cp);
bool is_punctuation(char32_t cp);

}  // namespace mds::utf8
