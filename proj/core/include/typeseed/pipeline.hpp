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

#ifndef TYPESEED_PIPELINE_HPP_
#define TYPESEED_PIPELINE_HPP_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "typeseed/registry.hpp"
#include "typeseed/type_expr.hpp"

namespace typeseed {

struct Parameter {
  std::string name;
  TypeExpression type;
};

struct FunctionSignature {
  std::string qualified_name;
  std::vector<Parameter> params;
  TypeExpression return_type;
};

struct ClassInfo {
  std::string qualified_name;
  std::vector<FieldDecl> fields;            // attribute types, declared order
  std::vector<FunctionSignature> methods;
};

// Facts extracted from an annotated codebase: class attributes and method
// signatures, plus the top-level function signatures.
struct TypeInfo {
  std::vector<ClassInfo> classes;
  std::vector<FunctionSignature> functions;
};

struct Admission {
  std::string class_name;
  std::size_t pass = 0;  // 1-based
};

struct Rejection {
  std::string class_name;
  std::vector<std::string> missing;  // type expressions that did not resolve
  std::string reason;                // set when registration itself failed
};

struct RegistrationReport {
  std::vector<Admission> admitted;  // in admission order
  std::vector<Rejection> rejected;
  std::size_t iterations_used = 0;
  bool fixed_point_reached = false;
};

inline constexpr std::size_t kDefaultMaxIterations = 5;

// Every type expression a signature mentions: each parameter type, the
// return type, and every argument expression nested inside them.
std::set<TypeExpression> types_of(const FunctionSignature& f);

// Fixed-point class admission. Each pass visits the classes in order and
// admits a class, registering it as a record over its fields, once all of
// its attribute types and method-signature types resolve. Admitted classes
// are visible to later classes within the same pass. Stops after a pass
// admits nothing or after `max_iterations` passes.
RegistrationReport register_types_fixed_point(
    Registry& registry, const TypeInfo& info,
    std::size_t max_iterations = kDefaultMaxIterations);

// The top-level functions every one of whose types resolves, in input order.
// Registers any anonymous unions those signatures need.
std::vector<FunctionSignature> extract_appropriate_functions(
    Registry& registry, const TypeInfo& info);

// Parses the TypeInfo JSON document. Throws IngestError (schema) or
// SyntaxError-derived IngestError (type strings) naming the field path.
TypeInfo parse_type_info(std::string_view json_text);
TypeInfo load_type_info(const std::filesystem::path& path);

}  // namespace typeseed

#endif  // TYPESEED_PIPELINE_HPP_
