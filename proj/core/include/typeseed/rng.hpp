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

#ifndef TYPESEED_RNG_HPP_
#define TYPESEED_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "typeseed/numeric.hpp"

namespace typeseed {

// Deterministic generator state threaded explicitly through every
// enumerator. Each draw consumes a state and yields a successor; the
// library never reuses a consumed state.
//
// The stream is SplitMix64: the state is a 64-bit counter advanced by the
// golden-ratio increment, and each output is a strong 64-bit finalizer of
// the advanced counter. This makes the sequence identical on every platform
// and lets `derive` produce statistically independent child streams.
class RandomState {
 public:
  constexpr explicit RandomState(std::uint64_t seed = 0) noexcept
      : counter_(seed) {}

  std::uint64_t counter() const noexcept { return counter_; }

  // A fresh stream keyed by this state and `stream`, for handing to another
  // thread. Does not advance this state.
  RandomState derive(std::uint64_t stream) const noexcept;

  friend bool operator==(const RandomState&, const RandomState&) = default;

 private:
  std::uint64_t counter_;
};

// A drawn value together with the successor state.
template <typename T>
struct Drawn {
  T value;
  RandomState next;
};

// Ordered list of positive case weights.
class WeightVector {
 public:
  // Throws DomainError when empty or any weight is zero.
  explicit WeightVector(std::vector<std::uint64_t> weights);
  WeightVector(std::initializer_list<std::uint64_t> weights)
      : WeightVector(std::vector<std::uint64_t>(weights)) {}

  std::size_t size() const noexcept { return weights_.size(); }
  std::uint64_t total() const noexcept { return total_; }
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }

 private:
  std::vector<std::uint64_t> weights_;
  std::uint64_t total_ = 0;
};

// Raw 64 uniform bits.
Drawn<std::uint64_t> next_u64(RandomState state) noexcept;

// Uniform natural in [0, bound). Unbiased (Lemire's multiply-and-reject).
// Throws DomainError when bound == 0.
Drawn<std::uint64_t> next_uniform(RandomState state, std::uint64_t bound);

// Uniform natural in [0, 2^bits) for arbitrary bit widths.
Drawn<BigInt> next_uniform_bits(RandomState state, unsigned bits);

// Index i with probability weights[i] / total. Draws u in [0, total) and
// returns the first i whose cumulative weight exceeds u.
Drawn<std::size_t> weighted_switch(RandomState state,
                                   const WeightVector& weights);

Drawn<bool> random_bool(RandomState state) noexcept;

struct SignedExponent {
  bool negative = false;
  int exponent = 0;
};

// Exponent uniform in [lo, hi] and an independent fair sign.
// Throws DomainError when lo > hi.
Drawn<SignedExponent> signed_exponent(RandomState state, int lo, int hi);

// A member of {+-2^i | lo <= i <= hi}: exponent uniform, sign uniform.
// Throws DomainError when lo > hi or lo < 0 (negative exponents are not
// integers; see signed_exponent for the rational form).
Drawn<BigInt> signed_power_of_two(RandomState state, int lo, int hi);

}  // namespace typeseed

#endif  // TYPESEED_RNG_HPP_
