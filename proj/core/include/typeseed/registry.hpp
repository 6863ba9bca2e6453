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

#ifndef TYPESEED_REGISTRY_HPP_
#define TYPESEED_REGISTRY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typeseed/type_expr.hpp"

namespace typeseed {

enum class TypeKind : std::uint8_t { kNonparametric, kParametric, kUnion, kRecord };

std::string_view to_string(TypeKind kind) noexcept;

// How values of a descriptor are produced. Built-in leaf enumerators and
// container constructors are closed sets; unions and records carry their
// own structure in the descriptor.
enum class GenerationRule : std::uint8_t {
  kInteger,
  kFloat,
  kBool,
  kString,
  kNone,
  kBytes,
  kList,
  kDictionary,
  kFixedTuple,
  kUnion,
  kRecord,
};

std::string_view to_string(GenerationRule rule) noexcept;

// Arity of a parametric type constructor; nullopt means variadic (>= 1).
using Arity = std::optional<std::size_t>;
inline constexpr Arity kVariadic = std::nullopt;

struct FieldDecl {
  std::string name;
  TypeExpression type;
  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct TypeDescriptor {
  std::string name;
  TypeKind kind = TypeKind::kNonparametric;
  GenerationRule rule = GenerationRule::kNone;
  Arity arity = 0;                      // parametric only
  std::vector<TypeExpression> members;  // unions
  std::vector<std::uint64_t> weights;   // unions; empty means uniform
  std::vector<FieldDecl> fields;        // records, declaration order
};

// The type table and alias table.
//
// Names are case-insensitive (stored lowercased). Alias chains are kept
// acyclic at insertion time, and no alias may shadow a type-table name.
// Not internally synchronized: single writer, or many readers between writes.
class Registry {
 public:
  Registry() = default;

  // Registry seeded with the base Python types:
  //   integer, float, bool, unicode-codepoint-string, nonetype, bytes;
  //   list/1, dictionary/2, fixedtuple/variadic;
  //   int -> integer, unicode -> unicode-codepoint-string,
  //   str -> unicode-codepoint-string, boolean -> bool.
  static Registry with_base_types();

  // Table-set semantics: re-registration overwrites.
  void add_nonparametric_type(std::string_view name, GenerationRule rule);
  void add_parametric_type(std::string_view name, Arity arity,
                           GenerationRule rule);

  // Throws AliasCycleError when the alias would close a cycle of any length
  // (including alias == target), RegistrationConflictError when `alias`
  // names a registered type.
  void add_alias_type(std::string_view alias, std::string_view target);

  // Members may be any type expressions. Throws PreconditionError for fewer
  // than two members or a bad weight vector; UnresolvedTypeError when a
  // member does not resolve.
  void register_union(std::string_view name,
                      const std::vector<TypeExpression>& members,
                      std::vector<std::uint64_t> weights = {});
  void register_union(std::string_view name,
                      const std::vector<std::string>& member_names);

  // Throws UnsupportedRecursionError if a field reaches the record itself,
  // UnresolvedTypeError if a field type does not resolve. Overwriting a
  // record with different fields appends a warning.
  void register_record(std::string_view qualified_name,
                       std::vector<FieldDecl> fields);

  // Registers the canonical anonymous union named by `expr.to_string()` and,
  // recursively, any anonymous unions nested in `expr`, when all of their
  // members resolve. Returns true when `expr` fully resolves afterwards.
  bool ensure_anonymous_unions(const TypeExpression& expr);

  // Follows the alias chain; case-insensitive. Throws UnresolvedTypeError.
  const TypeDescriptor& resolve(std::string_view name) const;

  // Head lookup plus arity checking, recursively over arguments. Returns
  // the head's descriptor. Throws UnresolvedTypeError.
  const TypeDescriptor& resolve(const TypeExpression& expr) const;

  bool resolves(const TypeExpression& expr) const noexcept;

  bool contains(std::string_view name) const;

  // Type-table entries in name order.
  std::vector<const TypeDescriptor*> descriptors() const;
  const std::map<std::string, std::string>& aliases() const noexcept {
    return aliases_;
  }
  const std::vector<std::string>& warnings() const noexcept {
    return warnings_;
  }

 private:
  const TypeDescriptor* find(std::string_view name) const;
  std::string canonical_name(std::string_view name) const;
  bool reaches(const TypeExpression& expr, const std::string& target,
               std::vector<std::string>& visiting) const;
  void check_not_alias(const std::string& name) const;

  std::map<std::string, TypeDescriptor, std::less<>> types_;
  std::map<std::string, std::string> aliases_;
  std::vector<std::string> warnings_;
};

}  // namespace typeseed

#endif  // TYPESEED_REGISTRY_HPP_
