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

#include "typeseed/charsets.hpp"

#include <vector>

namespace typeseed::charsets {
namespace {

constexpr std::u32string_view kCompoundEmoji[] = {
    U"\U0001F468\U0000200D\U0001F469\U0000200D\U0001F467",  // family: man, woman, girl
    U"\U0001F468\U0000200D\U0001F469\U0000200D\U0001F467\U0000200D\U0001F466",  // family: man, woman, girl, boy
    U"\U0001F469\U0000200D\U00002764\U0000FE0F\U0000200D\U0001F468",  // couple with heart
    U"\U0001F3F3\U0000FE0F\U0000200D\U0001F308",  // rainbow flag
    U"\U0001F3F4\U0000200D\U00002620\U0000FE0F",  // pirate flag
    U"\U0001F469\U0000200D\U0001F4BB",  // woman technologist
    U"\U0001F468\U0000200D\U0001F680",  // man astronaut
    U"\U0001F9D1\U0000200D\U0001F52C",  // scientist
    U"\U0001F44D\U0001F3FD",  // thumbs up: medium skin tone
    U"\U0001F44B\U0001F3FF",  // waving hand: dark skin tone
    U"\U0001F9D1\U0001F3FB",  // person: light skin tone
    U"\U0001F1FA\U0001F1F8",  // flag: United States
    U"\U0001F1EF\U0001F1F5",  // flag: Japan
    U"\U0001F1E9\U0001F1EA",  // flag: Germany
    U"\U00000031\U0000FE0F\U000020E3",  // keycap: 1
    U"\U00000023\U0000FE0F\U000020E3",  // keycap: #
    U"\U00002764\U0000FE0F\U0000200D\U0001F525",  // heart on fire
    U"\U0001F636\U0000200D\U0001F32B\U0000FE0F",  // face in clouds
    U"\U0001F43B\U0000200D\U00002744\U0000FE0F",  // polar bear
    U"\U0001F469\U0001F3FD\U0000200D\U0001F680",  // woman astronaut: medium skin tone
    U"\U0001F9D1\U0000200D\U0001F91D\U0000200D\U0001F9D1",  // people holding hands
    U"\U0001F415\U0000200D\U0001F9BA",  // service dog
    U"\U0000261D\U0000FE0F",  // index pointing up, emoji presentation
    U"\U0001F3C3\U0000200D\U00002640\U0000FE0F",  // woman running
};

}  // namespace

std::span<const std::u32string_view> compound_emoji() { return kCompoundEmoji; }

std::size_t alphabet_size(std::span<const CodepointRange> ranges) noexcept {
  std::size_t n = 0;
  for (const auto& r : ranges) n += static_cast<std::size_t>(r.last - r.first) + 1;
  return n;
}

char32_t codepoint_at(std::span<const CodepointRange> ranges,
                      std::size_t index) noexcept {
  for (const auto& r : ranges) {
    const std::size_t width = static_cast<std::size_t>(r.last - r.first) + 1;
    if (index < width) return r.first + static_cast<char32_t>(index);
    index -= width;
  }
  return ranges.back().last;
}

bool contains(std::span<const CodepointRange> ranges, char32_t cp) noexcept {
  for (const auto& r : ranges) {
    if (cp >= r.first && cp <= r.last) return true;
  }
  return false;
}

bool is_compound_emoji_sequence(std::u32string_view s) {
  // reachable[i]: the prefix of length i splits into entries.
  std::vector<bool> reachable(s.size() + 1, false);
  reachable[0] = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!reachable[i]) continue;
    for (auto seq : kCompoundEmoji) {
      if (s.substr(i, seq.size()) == seq) reachable[i + seq.size()] = true;
    }
  }
  return reachable[s.size()];
}

}  // namespace typeseed::charsets
