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

#ifndef TYPESEED_TYPE_EXPR_HPP_
#define TYPESEED_TYPE_EXPR_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace typeseed {

// Head name reserved for anonymous unions such as `union[float|int]`.
inline constexpr std::string_view kUnionHead = "union";

// Structured reference to a type: a head name plus argument expressions,
// e.g. `dictionary[str,list[float]]`.
//
// Text grammar (whitespace between tokens is ignored, names are lowercased):
//
//   expr  := name | name "[" expr ("," expr)* "]"
//   union := "union" "[" expr ("|" expr)* "]"
//   name  := [a-z0-9_.-]+
//
// Union arguments are sorted and deduplicated at parse time, so the textual
// form of an anonymous union is canonical; a union that collapses to a single
// member parses as that member.
struct TypeExpression {
  std::string head;
  std::vector<TypeExpression> args;

  bool is_anonymous_union() const noexcept {
    return head == kUnionHead && !args.empty();
  }

  // Canonical text: no whitespace, "," between ordinary arguments and "|"
  // between union members. parse(to_string(e)) == e.
  std::string to_string() const;

  friend bool operator==(const TypeExpression&, const TypeExpression&);
  friend std::strong_ordering operator<=>(const TypeExpression&,
                                          const TypeExpression&);
};

// Throws SyntaxError carrying the byte offset of the first bad token.
TypeExpression parse_type_expression(std::string_view text);

// Builds the canonical anonymous union over `members` (sorted, deduplicated;
// a single distinct member is returned as-is).
TypeExpression make_union_expression(std::vector<TypeExpression> members);

std::string to_lower(std::string_view text);

}  // namespace typeseed

#endif  // TYPESEED_TYPE_EXPR_HPP_
