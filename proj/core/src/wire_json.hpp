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

#ifndef TYPESEED_SRC_WIRE_JSON_HPP_
#define TYPESEED_SRC_WIRE_JSON_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "typeseed/value.hpp"

namespace typeseed::wire {

using Json = nlohmann::ordered_json;

Json to_json(const Value& v);
Value from_json(const Json& j, const std::string& path = "$");

}  // namespace typeseed::wire

#endif  // TYPESEED_SRC_WIRE_JSON_HPP_
