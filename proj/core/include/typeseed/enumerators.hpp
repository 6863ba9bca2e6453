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

#ifndef TYPESEED_ENUMERATORS_HPP_
#define TYPESEED_ENUMERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>

#include "typeseed/numeric.hpp"
#include "typeseed/rng.hpp"
#include "typeseed/value.hpp"

namespace typeseed {

// Receives (enumerator name, selected case index) for every case switch.
// Used by distribution tests; null means no tracing.
using TraceSink = std::function<void(std::string_view, std::size_t)>;

// Case weights of the custom enumerators, in table order.
namespace weights {
// sum of powers of two, 65-bit, power of two +-1, -1, 0, 1
inline constexpr std::uint64_t kInt[] = {85, 6, 6, 1, 1, 1};
// rational, small pow2, large pow2, f32 normal, f64 normal, max exact int,
// subnormal, nan, inf, -inf, -0
inline constexpr std::uint64_t kFloat[] = {76, 5, 5, 3, 3, 2, 2, 1, 1, 1, 1};
// ascii, emoji, greek, math, latin diacritic, compound emoji, mixed
inline constexpr std::uint64_t kString[] = {50, 2, 2, 2, 2, 2, 40};
// empty, [1,32], [33,512], [513,10^4]
inline constexpr std::uint64_t kLength[] = {5, 80, 14, 1};
}  // namespace weights

inline constexpr std::size_t kMaxStringLength = 10'000;

enum class IntCase : std::size_t {
  kSumOfPowers,
  kWide,
  kPowerOffByOne,
  kMinusOne,
  kZero,
  kOne,
};

enum class FloatCase : std::size_t {
  kRational,
  kSmallPower,
  kLargePower,
  kFloat32Normal,
  kFloat64Normal,
  kMaxExactInteger,
  kSubnormal,
  kNaN,
  kPosInf,
  kNegInf,
  kNegZero,
};

enum class StringCase : std::size_t {
  kAscii,
  kEmoji,
  kGreek,
  kMathSymbol,
  kLatinDiacritic,
  kCompoundEmoji,
  kMixed,
};

Drawn<BigInt> enum_int(RandomState state, const TraceSink* trace = nullptr);
Drawn<FloatValue> enum_float(RandomState state,
                             const TraceSink* trace = nullptr);
Drawn<CodepointString> enum_string(RandomState state,
                                   const TraceSink* trace = nullptr);
Drawn<ByteString> enum_bytes(RandomState state,
                             const TraceSink* trace = nullptr);
Drawn<bool> enum_bool(RandomState state);
Drawn<NoneValue> enum_none(RandomState state);

// Shared length distribution for strings, bytes and containers: 5% empty,
// 80% uniform [1,32], 14% uniform [33,512], 1% uniform [513,10^4].
Drawn<std::size_t> draw_length(RandomState state,
                               const TraceSink* trace = nullptr);

// The fixed value sets of the float enumerator, as exact rationals.
std::span<const FloatValue> float32_normal_set();
std::span<const FloatValue> float64_normal_set();
std::span<const FloatValue> max_exact_integer_set();
std::span<const FloatValue> subnormal_set();

}  // namespace typeseed

#endif  // TYPESEED_ENUMERATORS_HPP_
