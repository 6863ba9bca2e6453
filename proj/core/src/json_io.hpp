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

#ifndef TYPESEED_SRC_JSON_IO_HPP_
#define TYPESEED_SRC_JSON_IO_HPP_

#include <nlohmann/json.hpp>

#include "typeseed/pipeline.hpp"
#include "typeseed/registry.hpp"

namespace typeseed::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const RegistrationReport& report);
// Same schema as a TypeInfo signature entry.
Json to_json(const FunctionSignature& f);
Json to_json(const TypeDescriptor& d);
Json error_body(const std::string& kind, const std::string& message);

}  // namespace typeseed::json_io

#endif  // TYPESEED_SRC_JSON_IO_HPP_
