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

#include "typeseed/enumerators.hpp"

#include <vector>

#include "typeseed/charsets.hpp"

namespace typeseed {
namespace {

const WeightVector& int_weights() {
  static const WeightVector w(
      std::vector<std::uint64_t>(std::begin(weights::kInt), std::end(weights::kInt)));
  return w;
}
const WeightVector& float_weights() {
  static const WeightVector w(std::vector<std::uint64_t>(
      std::begin(weights::kFloat), std::end(weights::kFloat)));
  return w;
}
const WeightVector& string_weights() {
  static const WeightVector w(std::vector<std::uint64_t>(
      std::begin(weights::kString), std::end(weights::kString)));
  return w;
}
const WeightVector& length_weights() {
  static const WeightVector w(std::vector<std::uint64_t>(
      std::begin(weights::kLength), std::end(weights::kLength)));
  return w;
}

void emit(const TraceSink* trace, std::string_view name, std::size_t index) {
  if (trace && *trace) (*trace)(name, index);
}

FloatValue exact(Rational r) { return FloatValue(std::move(r)); }

// 2^127 (2^-23 - 2) and 2^1023 (2^-52 - 2). Both are negative; the sets keep
// that sign rather than substituting the positive extrema.
Rational f32_extreme() { return pow2_rational(127) * (pow2_rational(-23) - 2); }
Rational f64_extreme() {
  return pow2_rational(1023) * (pow2_rational(-52) - 2);
}

template <typename T>
Drawn<T> pick(RandomState state, std::span<const T> set) {
  auto [i, next] = next_uniform(state, set.size());
  return {set[i], next};
}

// One of {a - 1, a, a + 1} for a = +-2^e.
FloatValue power_with_offset(const SignedExponent& e, std::uint64_t offset) {
  Rational a = pow2_rational(e.exponent);
  if (e.negative) a = -a;
  return exact(a + static_cast<int>(offset) - 1);
}

using Alphabet = std::span<const charsets::CodepointRange>;

constexpr Alphabet kPureAlphabets[] = {
    charsets::kAscii, charsets::kEmoji, charsets::kGreek,
    charsets::kMathSymbol, charsets::kLatinDiacritic};

Drawn<char32_t> draw_char(RandomState state, Alphabet alphabet) {
  auto [i, next] = next_uniform(state, charsets::alphabet_size(alphabet));
  return {charsets::codepoint_at(alphabet, i), next};
}

}  // namespace

Drawn<std::size_t> draw_length(RandomState state, const TraceSink* trace) {
  auto [bucket, s] = weighted_switch(state, length_weights());
  emit(trace, "length", bucket);
  switch (bucket) {
    case 0:
      return {0, s};
    case 1: {
      auto [n, s2] = next_uniform(s, 32);
      return {1 + n, s2};
    }
    case 2: {
      auto [n, s2] = next_uniform(s, 512 - 33 + 1);
      return {33 + n, s2};
    }
    default: {
      auto [n, s2] = next_uniform(s, kMaxStringLength - 513 + 1);
      return {513 + n, s2};
    }
  }
}

Drawn<BigInt> enum_int(RandomState state, const TraceSink* trace) {
  auto [choice, s] = weighted_switch(state, int_weights());
  emit(trace, "int", choice);
  switch (static_cast<IntCase>(choice)) {
    case IntCase::kSumOfPowers: {
      auto [a, s1] = signed_power_of_two(s, 0, 64);
      auto [b, s2] = signed_power_of_two(s1, 0, 16);
      return {a + b, s2};
    }
    case IntCase::kWide: {
      auto [v, s1] = next_uniform_bits(s, 65);
      auto [positive, s2] = random_bool(s1);
      BigInt magnitude = v + 1;
      return {positive ? magnitude : BigInt(-magnitude), s2};
    }
    case IntCase::kPowerOffByOne: {
      auto [p, s1] = signed_power_of_two(s, 1, 65);
      auto [offset, s2] = next_uniform(s1, 3);
      return {p + static_cast<int>(offset) - 1, s2};
    }
    case IntCase::kMinusOne:
      return {BigInt(-1), s};
    case IntCase::kZero:
      return {BigInt(0), s};
    case IntCase::kOne:
      return {BigInt(1), s};
  }
  return {BigInt(1), s};
}

Drawn<FloatValue> enum_float(RandomState state, const TraceSink* trace) {
  auto [choice, s] = weighted_switch(state, float_weights());
  emit(trace, "float", choice);
  switch (static_cast<FloatCase>(choice)) {
    case FloatCase::kRational: {
      auto [num, s1] = enum_int(s);
      auto [den, s2] = enum_int(s1);
      for (int retry = 0; den == 0 && retry < 8; ++retry) {
        auto d = enum_int(s2);
        den = std::move(d.value);
        s2 = d.next;
      }
      if (den == 0) den = 1;
      return {FloatValue::ratio(num, den), s2};
    }
    case FloatCase::kSmallPower: {
      auto [e, s1] = signed_exponent(s, -64, 64);
      auto [offset, s2] = next_uniform(s1, 3);
      return {power_with_offset(e, offset), s2};
    }
    case FloatCase::kLargePower: {
      // Exponents [65, 1024] and [-1024, -65] are the same size, so one
      // uniform draw over both covers the union uniformly.
      auto [u, s1] = next_uniform(s, 2 * 960);
      const int exponent = u < 960 ? 65 + static_cast<int>(u)
                                   : -(65 + static_cast<int>(u - 960));
      auto [negative, s2] = random_bool(s1);
      auto [offset, s3] = next_uniform(s2, 3);
      return {power_with_offset({negative, exponent}, offset), s3};
    }
    case FloatCase::kFloat32Normal:
      return pick(s, float32_normal_set());
    case FloatCase::kFloat64Normal:
      return pick(s, float64_normal_set());
    case FloatCase::kMaxExactInteger:
      return pick(s, max_exact_integer_set());
    case FloatCase::kSubnormal:
      return pick(s, subnormal_set());
    case FloatCase::kNaN:
      return {FloatValue::nan(), s};
    case FloatCase::kPosInf:
      return {FloatValue::pos_inf(), s};
    case FloatCase::kNegInf:
      return {FloatValue::neg_inf(), s};
    case FloatCase::kNegZero:
      return {FloatValue::neg_zero(), s};
  }
  return {FloatValue::nan(), s};
}

Drawn<CodepointString> enum_string(RandomState state, const TraceSink* trace) {
  auto [choice, s] = weighted_switch(state, string_weights());
  emit(trace, "string", choice);
  auto [length, st] = draw_length(s);

  const auto compound = charsets::compound_emoji();
  CodepointString out;
  out.reserve(length);

  const auto c = static_cast<StringCase>(choice);
  if (c == StringCase::kCompoundEmoji || c == StringCase::kMixed) {
    // `length` is a codepoint budget; generation stops at the first
    // compound sequence that would overrun it.
    while (out.size() < length) {
      std::size_t category = static_cast<std::size_t>(StringCase::kCompoundEmoji);
      if (c == StringCase::kMixed) {
        auto d = next_uniform(st, 6);
        category = d.value;
        st = d.next;
      }
      if (category == static_cast<std::size_t>(StringCase::kCompoundEmoji)) {
        auto [seq, next] = pick(st, compound);
        st = next;
        if (out.size() + seq.size() > length) break;
        out.append(seq);
      } else {
        auto [cp, next] = draw_char(st, kPureAlphabets[category]);
        st = next;
        out.push_back(cp);
      }
    }
    return {std::move(out), st};
  }

  const Alphabet alphabet = kPureAlphabets[choice];
  for (std::size_t i = 0; i < length; ++i) {
    auto [cp, next] = draw_char(st, alphabet);
    st = next;
    out.push_back(cp);
  }
  return {std::move(out), st};
}

Drawn<ByteString> enum_bytes(RandomState state, const TraceSink* trace) {
  auto [length, s] = draw_length(state, trace);
  ByteString out;
  out.reserve(length);
  while (out.size() < length) {
    auto [bits, next] = next_u64(s);
    s = next;
    for (int k = 0; k < 8 && out.size() < length; ++k) {
      out.push_back(static_cast<std::uint8_t>(bits >> (8 * k)));
    }
  }
  return {std::move(out), s};
}

Drawn<bool> enum_bool(RandomState state) { return random_bool(state); }

Drawn<NoneValue> enum_none(RandomState state) { return {NoneValue{}, state}; }

std::span<const FloatValue> float32_normal_set() {
  static const std::vector<FloatValue> set = [] {
    const Rational lo = pow2_rational(-126);
    const Rational hi = f32_extreme();
    return std::vector<FloatValue>{exact(lo),     exact(lo + 1), exact(lo - 1),
                                   exact(hi),     exact(hi - 1), exact(hi + 1)};
  }();
  return set;
}

std::span<const FloatValue> float64_normal_set() {
  static const std::vector<FloatValue> set = [] {
    const Rational lo = pow2_rational(-1022);
    const Rational hi = f64_extreme();
    return std::vector<FloatValue>{exact(lo),     exact(lo - 1), exact(lo + 1),
                                   exact(hi),     exact(hi - 1), exact(hi + 1)};
  }();
  return set;
}

std::span<const FloatValue> max_exact_integer_set() {
  static const std::vector<FloatValue> set = {
      exact(pow2_rational(24)), exact(-pow2_rational(24)),
      exact(pow2_rational(53)), exact(-pow2_rational(53))};
  return set;
}

std::span<const FloatValue> subnormal_set() {
  static const std::vector<FloatValue> set = [] {
    const Rational max32 = pow2_rational(-126) * (1 - pow2_rational(-23));
    const Rational max64 = pow2_rational(-1022) * (1 - pow2_rational(-52));
    return std::vector<FloatValue>{
        exact(pow2_rational(-149)),  exact(-pow2_rational(-149)),
        exact(max32),                exact(-max32),
        exact(pow2_rational(-1074)), exact(-pow2_rational(-1074)),
        exact(max64),                exact(-max64)};
  }();
  return set;
}

}  // namespace typeseed
