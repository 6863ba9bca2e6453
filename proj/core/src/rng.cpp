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

#include "typeseed/rng.hpp"

#include <string>

#include "typeseed/errors.hpp"

namespace typeseed {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomState RandomState::derive(std::uint64_t stream) const noexcept {
  return RandomState(mix64(counter_ ^ mix64(stream + kGoldenGamma)));
}

WeightVector::WeightVector(std::vector<std::uint64_t> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("weight vector must not be empty");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] == 0) {
      throw DomainError("weight " + std::to_string(i) + " is zero");
    }
    total_ += weights_[i];
  }
}

Drawn<std::uint64_t> next_u64(RandomState state) noexcept {
  const std::uint64_t advanced = state.counter() + kGoldenGamma;
  return {mix64(advanced), RandomState(advanced)};
}

Drawn<std::uint64_t> next_uniform(RandomState state, std::uint64_t bound) {
  if (bound == 0) throw DomainError("next_uniform: bound must be positive");
  // Lemire, "Fast Random Integer Generation in an Interval" (2019).
  auto [x, s] = next_u64(state);
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      auto d = next_u64(s);
      s = d.next;
      m = static_cast<unsigned __int128>(d.value) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return {static_cast<std::uint64_t>(m >> 64), s};
}

Drawn<BigInt> next_uniform_bits(RandomState state, unsigned bits) {
  BigInt result = 0;
  unsigned filled = 0;
  while (filled < bits) {
    auto d = next_u64(state);
    state = d.next;
    const unsigned take = bits - filled < 64 ? bits - filled : 64;
    std::uint64_t chunk = d.value;
    if (take < 64) chunk >>= (64 - take);
    result |= BigInt(chunk) << filled;
    filled += take;
  }
  return {std::move(result), state};
}

Drawn<std::size_t> weighted_switch(RandomState state,
                                   const WeightVector& weights) {
  auto [u, next] = next_uniform(state, weights.total());
  std::uint64_t cumulative = 0;
  const auto w = weights.weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    cumulative += w[i];
    if (u < cumulative) return {i, next};
  }
  throw InternalError("weighted_switch: cumulative sum exhausted");
}

Drawn<bool> random_bool(RandomState state) noexcept {
  auto [x, next] = next_u64(state);
  return {(x >> 63) != 0, next};
}

Drawn<SignedExponent> signed_exponent(RandomState state, int lo, int hi) {
  if (lo > hi) {
    throw DomainError("signed exponent range is empty: lo=" +
                      std::to_string(lo) + " > hi=" + std::to_string(hi));
  }
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) -
                                               static_cast<std::int64_t>(lo)) +
                    1;
  auto [offset, s1] = next_uniform(state, span);
  auto [negative, s2] = random_bool(s1);
  return {{negative, lo + static_cast<int>(offset)}, s2};
}

Drawn<BigInt> signed_power_of_two(RandomState state, int lo, int hi) {
  if (lo < 0) {
    throw DomainError("signed_power_of_two: negative exponent " +
                      std::to_string(lo) + " has no integer power");
  }
  auto [e, next] = signed_exponent(state, lo, hi);
  BigInt magnitude = pow2(static_cast<unsigned>(e.exponent));
  return {e.negative ? BigInt(-magnitude) : magnitude, next};
}

}  // namespace typeseed
