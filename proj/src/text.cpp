#include "varid/text.hpp"

#include <algorithm>
#include <array>

namespace varid {

std::uint32_t utf8_decode(std::string_view s, std::size_t& byte_pos) {
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  const std::size_t n = s.size();
  const unsigned char b0 = p[byte_pos];
  if (b0 < 0x80) {
    ++byte_pos;
    return b0;
  }
  auto cont = [&](std::size_t i) { return i < n && (p[i] & 0xC0) == 0x80; };
  if ((b0 & 0xE0) == 0xC0 && cont(byte_pos + 1)) {
    std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x1F) << 6) |
                       (p[byte_pos + 1] & 0x3F);
    byte_pos += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(byte_pos + 1) && cont(byte_pos + 2)) {
    std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x0F) << 12) |
                       (static_cast<std::uint32_t>(p[byte_pos + 1] & 0x3F) << 6) |
                       (p[byte_pos + 2] & 0x3F);
    byte_pos += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(byte_pos + 1) && cont(byte_pos + 2) && cont(byte_pos + 3)) {
    std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x07) << 18) |
                       (static_cast<std::uint32_t>(p[byte_pos + 1] & 0x3F) << 12) |
                       (static_cast<std::uint32_t>(p[byte_pos + 2] & 0x3F) << 6) |
                       (p[byte_pos + 3] & 0x3F);
    byte_pos += 4;
    return cp;
  }
  ++byte_pos;
  return 0xFFFD;
}

std::vector<std::size_t> utf8_offsets(std::string_view s) {
  std::vector<std::size_t> offsets;
  offsets.reserve(s.size() + 1);
  std::size_t pos = 0;
  while (pos < s.size()) {
    offsets.push_back(pos);
    utf8_decode(s, pos);
  }
  offsets.push_back(s.size());
  return offsets;
}

std::size_t utf8_length(std::string_view s) {
  std::size_t pos = 0, count = 0;
  while (pos < s.size()) {
    utf8_decode(s, pos);
    ++count;
  }
  return count;
}

namespace {

struct Range {
  std::uint32_t lo, hi;  // inclusive
};

// Sorted letter ranges; coarse outside Latin.
constexpr std::array<Range, 37> kLetterRanges{{
    {0x0041, 0x005A}, {0x0061, 0x007A}, {0x00AA, 0x00AA}, {0x00B5, 0x00B5},
    {0x00BA, 0x00BA}, {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x02C1},
    {0x02C6, 0x02D1}, {0x0370, 0x0374}, {0x0376, 0x0377}, {0x037A, 0x037D},
    {0x037F, 0x037F}, {0x0386, 0x0386}, {0x0388, 0x038A}, {0x038C, 0x038C},
    {0x038E, 0x03A1}, {0x03A3, 0x03F5}, {0x03F7, 0x0481}, {0x048A, 0x052F},
    {0x0531, 0x0556}, {0x0561, 0x0587}, {0x05D0, 0x05EA}, {0x0620, 0x064A},
    {0x066E, 0x066F}, {0x0671, 0x06D3}, {0x1E00, 0x1EFF}, {0x1F00, 0x1F15},
    {0x1F18, 0x1F1D}, {0x1F20, 0x1F45}, {0x1F48, 0x1F4D}, {0x1F50, 0x1FFC},
    {0x2C60, 0x2C7F}, {0x3041, 0x30FF}, {0x4E00, 0x9FFF}, {0xA720, 0xA7CA},
    {0xAC00, 0xD7A3},
}};

}  // namespace

bool is_letter(std::uint32_t cp) {
  auto it = std::upper_bound(kLetterRanges.begin(), kLetterRanges.end(), cp,
                             [](std::uint32_t v, const Range& r) { return v < r.lo; });
  if (it == kLetterRanges.begin()) return false;
  --it;
  return cp >= it->lo && cp <= it->hi;
}

bool contains_letter(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (is_letter(utf8_decode(s, pos))) return true;
  }
  return false;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_ascii_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> token_spans(std::string_view s) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ascii_space(s[i])) ++i;
    if (i >= s.size()) break;
    std::size_t begin = i;
    while (i < s.size() && !is_ascii_space(s[i])) ++i;
    spans.emplace_back(begin, i);
  }
  return spans;
}

std::size_t count_tokens(std::string_view s) { return token_spans(s).size(); }

}  // namespace varid
