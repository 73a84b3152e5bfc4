#ifndef VARID_TEXT_HPP
#define VARID_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace varid {

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Decodes the codepoint starting at byte_pos and advances byte_pos past it.
// Invalid sequences decode as U+FFFD one byte at a time.
std::uint32_t utf8_decode(std::string_view s, std::size_t& byte_pos);

// Byte offset of each codepoint, with a final entry equal to s.size().
std::vector<std::size_t> utf8_offsets(std::string_view s);

std::size_t utf8_length(std::string_view s);

// Letter test over a compact table of Unicode letter ranges. Covers Latin
// (including Extended Additional, so combining-free underdotted forms count),
// Greek, Cyrillic, Armenian, Hebrew, Arabic, kana, CJK and Hangul. Not a full
// Unicode property table.
bool is_letter(std::uint32_t cp);

bool contains_letter(std::string_view s);

// Collapses runs of ASCII whitespace to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

// Byte ranges [begin, end) of maximal non-whitespace runs.
std::vector<std::pair<std::size_t, std::size_t>> token_spans(std::string_view s);

std::size_t count_tokens(std::string_view s);

}  // namespace varid

#endif  // VARID_TEXT_HPP
