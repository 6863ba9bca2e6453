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

#ifndef TYPESEED_NUMERIC_HPP_
#define TYPESEED_NUMERIC_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace typeseed {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^exponent for exponent >= 0.
BigInt pow2(unsigned exponent);

// Signed 2^exponent as an exact rational; exponent may be negative.
Rational pow2_rational(int exponent);

// Base-10 rendering with a leading '-' for negatives and no leading zeros.
std::string to_decimal(const BigInt& value);

// Inverse of to_decimal. Accepts only the canonical form produced by it;
// returns false on anything else.
bool parse_decimal(const std::string& text, BigInt& out);

}  // namespace typeseed

#endif  // TYPESEED_NUMERIC_HPP_
