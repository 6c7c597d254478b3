/* Copyright 2026 The Textherm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "textherm/textcorpus.hpp"

namespace textherm {
namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

struct Decoded {
  char32_t cp = kInvalid;
  std::size_t length = 1;
};

// Decodes one code point at `pos`; malformed input yields kInvalid with a
// length of one byte so the caller can resynchronize.
Decoded decode(std::string_view s, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len;
  char32_t cp;
  char32_t min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return {};
  }
  if (pos + len > s.size()) return {};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return {};
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return {};
  return {cp, len};
}

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

bool is_space(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\v': case '\f': case '\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return in(cp, 0x2000, 0x200B);
  }
}

bool is_digit(char32_t cp) { return in(cp, '0', '9'); }

// Letters and marks that continue a word. Outside ASCII, everything that is
// not a known punctuation or symbol block counts as a letter.
bool is_letter(char32_t cp) {
  if (cp < 0x80) return in(cp, 'a', 'z') || in(cp, 'A', 'Z');
  if (in(cp, 0x80, 0xBF) || cp == 0xD7 || cp == 0xF7) return false;
  if (is_space(cp)) return false;
  if (in(cp, 0x2010, 0x2BFF)) return false;  // punctuation, symbols, arrows
  if (in(cp, 0x2E00, 0x2E7F) || in(cp, 0x3001, 0x303F)) return false;
  if (in(cp, 0xFE30, 0xFE4F)) return false;
  if (in(cp, 0xFF01, 0xFF0F) || in(cp, 0xFF1A, 0xFF20) ||
      in(cp, 0xFF3B, 0xFF40) || in(cp, 0xFF5B, 0xFF65)) {
    return false;
  }
  if (in(cp, 0x1F000, 0x1FAFF)) return false;  // emoji and pictographs
  return cp != kInvalid;
}

char32_t to_lower(char32_t cp) {
  if (in(cp, 'A', 'Z')) return cp + 0x20;
  if (cp < 0x80) return cp;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
  if (in(cp, 0x100, 0x137) || in(cp, 0x14A, 0x177)) return cp | 1;
  if ((in(cp, 0x139, 0x148) || in(cp, 0x179, 0x17E)) && (cp & 1)) {
    return cp + 1;
  }
  if (in(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 0x20;
  if (in(cp, 0x410, 0x42F)) return cp + 0x20;
  if (in(cp, 0x400, 0x40F)) return cp + 0x50;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) {
    const Decoded d = decode(s, pos);
    if (d.cp == kInvalid) {
      out.push_back(s[pos]);
    } else {
      append_utf8(out, to_lower(d.cp));
    }
    pos += d.length;
  }
  return out;
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord:
      return "word";
    case TokenKind::kPunctuation:
      return "punctuation";
    case TokenKind::kNumber:
      return "number";
  }
  return "unknown";
}

std::vector<Token> tokenize(std::string_view text,
                            const TokenizerConfig& config) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    Decoded d = decode(text, pos);
    if (is_space(d.cp)) {
      pos += d.length;
      continue;
    }
    const std::size_t begin = pos;
    if (is_letter(d.cp) || is_digit(d.cp)) {
      bool all_digits = true;
      while (pos < text.size()) {
        d = decode(text, pos);
        if (!is_letter(d.cp) && !is_digit(d.cp)) break;
        all_digits = all_digits && is_digit(d.cp);
        pos += d.length;
      }
      Token token;
      token.surface = std::string(text.substr(begin, pos - begin));
      token.kind = all_digits ? TokenKind::kNumber : TokenKind::kWord;
      token.normalized = config.lowercase && !all_digits
                             ? lowercase(token.surface)
                             : token.surface;
      token.span = {begin, pos};
      tokens.push_back(std::move(token));
    } else {
      pos += d.length;
      Token token;
      token.surface = std::string(text.substr(begin, pos - begin));
      token.normalized = token.surface;
      token.kind = TokenKind::kPunctuation;
      token.span = {begin, pos};
      tokens.push_back(std::move(token));
    }
  }
  return tokens;
}

}  // namespace textherm
