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

#ifndef TYPESEED_GENERATE_HPP_
#define TYPESEED_GENERATE_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "typeseed/enumerators.hpp"
#include "typeseed/registry.hpp"
#include "typeseed/rng.hpp"
#include "typeseed/type_expr.hpp"
#include "typeseed/value.hpp"

namespace typeseed {

// Lists and dictionaries draw their size from draw_length, capped at
// kMaxContainerLength at the top level and at a quarter of the enclosing
// cap for each list or dictionary they are nested in, never below
// kMinContainerLengthCap. Keeps nested values small without changing the
// leaf enumerators.
inline constexpr std::size_t kMaxContainerLength = 64;
inline constexpr std::size_t kMinContainerLengthCap = 2;

// Length cap for a list or dictionary inside `nesting` others.
std::size_t container_length_cap(std::size_t nesting) noexcept;
// Colliding dictionary keys are redrawn at most this many times per entry.
inline constexpr int kKeyRetries = 16;
// Nesting limit; unreachable for registries that reject recursive records.
inline constexpr std::size_t kMaxGenerationDepth = 256;

// A value structurally conforming to `type`. Throws UnresolvedTypeError when
// `type` does not resolve in `registry`.
Drawn<Value> generate_value(const Registry& registry, const TypeExpression& type,
                            RandomState state,
                            const TraceSink* trace = nullptr);

// `count` values of `type`, threading the state left to right.
Drawn<std::vector<Value>> generate_examples(const Registry& registry,
                                            const TypeExpression& type,
                                            std::size_t count,
                                            RandomState state);
Drawn<std::vector<Value>> generate_examples(const Registry& registry,
                                            std::string_view type,
                                            std::size_t count,
                                            RandomState state);

// Structural membership, recursively. Throws UnresolvedTypeError when `type`
// does not resolve.
bool is_member(const Registry& registry, const Value& value,
               const TypeExpression& type);

}  // namespace typeseed

#endif  // TYPESEED_GENERATE_HPP_
