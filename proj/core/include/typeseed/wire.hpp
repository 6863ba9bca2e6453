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

#ifndef TYPESEED_WIRE_HPP_
#define TYPESEED_WIRE_HPP_

#include <string>
#include <string_view>

#include "typeseed/value.hpp"

namespace typeseed {

// Canonical JSON encoding of a generated value. Object keys are emitted in a
// fixed order ("t" first), output is compact, and every value has exactly one
// encoding:
//
//   int      {"t":"int","v":"<decimal>"}
//   float    {"t":"float","num":"<decimal>","den":"<positive decimal>"}
//            {"t":"float","special":"nan"|"inf"|"-inf"|"-0"}
//   str      {"t":"str","v":"<utf-8>"}
//   bytes    {"t":"bytes","v":[0..255, ...]}
//   bool     {"t":"bool","v":true|false}
//   none     {"t":"none"}
//   list     {"t":"list","v":[...]}
//   tuple    {"t":"tuple","v":[...]}
//   map      {"t":"map","v":[[key,value], ...]}
//   record   {"t":"record","class":"<name>","fields":{"<field>":value, ...}}
std::string encode_value(const Value& v);

// Inverse of encode_value. Rationals are reduced to lowest terms. Throws
// DecodeError naming the JSON path of the first violation.
Value decode_value(std::string_view text);

}  // namespace typeseed

#endif  // TYPESEED_WIRE_HPP_
