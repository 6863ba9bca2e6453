// Copyright 2026 The typeseed Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TYPESEED_CHARSETS_HPP_
#define TYPESEED_CHARSETS_HPP_

#include <cstddef>
#include <span>
#include <string_view>

namespace typeseed::charsets {

struct CodepointRange {
  char32_t first;
  char32_t last;  // inclusive
};

// Scalar-codepoint alphabets used by the string enumerator.
inline constexpr CodepointRange kAscii[] = {{0x00, 0x7F}};
inline constexpr CodepointRange kGreek[] = {{0x0370, 0x03FF}};
inline constexpr CodepointRange kMathSymbol[] = {{0x2200, 0x22FF}};
inline constexpr CodepointRange kLatinDiacritic[] = {{0x00C0, 0x024F}};
inline constexpr CodepointRange kEmoji[] = {{0x1F300, 0x1FAFF}};

// Multi-codepoint emoji: ZWJ sequences, skin-tone modifier sequences, flags
// and keycaps. Each entry spans at least two codepoints.
std::span<const std::u32string_view> compound_emoji();

std::size_t alphabet_size(std::span<const CodepointRange> ranges) noexcept;

// The index-th codepoint of the alphabet, counting through the ranges.
char32_t codepoint_at(std::span<const CodepointRange> ranges,
                      std::size_t index) noexcept;

bool contains(std::span<const CodepointRange> ranges, char32_t cp) noexcept;

// True when `s` splits into a concatenation of compound_emoji() entries.
bool is_compound_emoji_sequence(std::u32string_view s);

}  // namespace typeseed::charsets

#endif  // TYPESEED_CHARSETS_HPP_
