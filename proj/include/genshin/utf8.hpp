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

#ifndef GENSHIN_UTF8_HPP_
#define GENSHIN_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace genshin::utf8 {

// Decodes UTF-8 bytes into Unicode scalar values. Bytes that do not form a
// valid sequence (truncated sequences, overlong encodings, surrogates,
// values past U+10FFFF) are mapped one byte at a time to lone surrogates
// 0xDC80..0xDCFF, so encode(decode(s)) == s for every byte string.
std::u32string decode(std::string_view text);

// Inverse of decode. Scalars in 0xDC80..0xDCFF become their original raw
// byte; everything else is encoded as standard UTF-8.
std::string encode(const std::u32string& scalars);

// Encodes a single scalar using the same convention as encode().
std::string encode_scalar(char32_t scalar);

// Number of scalars decode() would produce, without allocating.
std::size_t scalar_count(std::string_view text);

}  // namespace genshin::utf8

#endif  // GENSHIN_UTF8_HPP_
