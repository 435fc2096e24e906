// Copyright 2026 The Genshin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "genshin/utf8.hpp"

#include <cstdint>

namespace genshin::utf8 {
namespace {

constexpr char32_t kEscapeBase = 0xDC00;

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

// Tries to decode one sequence starting at text[pos]. Returns the scalar and
// advances pos past the sequence, or returns false leaving pos untouched.
bool decode_one(std::string_view text, std::size_t& pos, char32_t& out) {
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  const unsigned char lead = bytes[pos];
  if (lead < 0x80) {
    out = lead;
    pos += 1;
    return true;
  }
  std::size_t len = 0;
  char32_t value = 0;
  char32_t min_value = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    value = lead & 0x1F;
    min_value = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    value = lead & 0x0F;
    min_value = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    value = lead & 0x07;
    min_value = 0x10000;
  } else {
    return false;
  }
  if (pos + len > text.size()) return false;
  for (std::size_t i = 1; i < len; ++i) {
    if (!is_continuation(bytes[pos + i])) return false;
    value = (value << 6) | (bytes[pos + i] & 0x3F);
  }
  if (value < min_value) return false;              // overlong
  if (value >= 0xD800 && value <= 0xDFFF) return false;  // surrogate
  if (value > 0x10FFFF) return false;
  out = value;
  pos += len;
  return true;
}

}  // namespace

std::u32string decode(std::string_view text) {
  std::u32string result;
  result.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t scalar = 0;
    if (decode_one(text, pos, scalar)) {
      result.push_back(scalar);
    } else {
      result.push_back(kEscapeBase +
                       static_cast<unsigned char>(text[pos]));
      pos += 1;
    }
  }
  return result;
}

std::string encode_scalar(char32_t scalar) {
  std::string out;
  if (scalar >= 0xDC80 && scalar <= 0xDCFF) {
    out.push_back(static_cast<char>(scalar & 0xFF));
  } else if (scalar < 0x80) {
    out.push_back(static_cast<char>(scalar));
  } else if (scalar < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (scalar >> 6)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  } else if (scalar < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (scalar >> 12)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (scalar >> 18)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  }
  return out;
}

std::string encode(const std::u32string& scalars) {
  std::string out;
  out.reserve(scalars.size());
  for (char32_t scalar : scalars) out += encode_scalar(scalar);
  return out;
}

std::size_t scalar_count(std::string_view text) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t scalar = 0;
    if (!decode_one(text, pos, scalar)) pos += 1;
    ++count;
  }
  return count;
}

}  // namespace genshin::utf8
