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

#include "typeseed/numeric.hpp"

#include <cstdlib>

namespace typeseed {

BigInt pow2(unsigned exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

Rational pow2_rational(int exponent) {
  if (exponent >= 0) return Rational(pow2(static_cast<unsigned>(exponent)));
  return Rational(BigInt(1), pow2(static_cast<unsigned>(-exponent)));
}

std::string to_decimal(const BigInt& value) { return value.str(); }

bool parse_decimal(const std::string& text, BigInt& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  if (pos == text.size()) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  // No leading zeros, and no "-0".
  if (text[pos] == '0' && (text.size() - pos > 1 || negative)) return false;
  out = BigInt(text);
  return true;
}

}  // namespace typeseed
