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

#include "typeseed/registry.hpp"

#include <algorithm>

#include "typeseed/errors.hpp"

namespace typeseed {

std::string_view to_string(TypeKind kind) noexcept {
  switch (kind) {
    case TypeKind::kNonparametric: return "nonparametric";
    case TypeKind::kParametric: return "parametric";
    case TypeKind::kUnion: return "union";
    case TypeKind::kRecord: return "record";
  }
  return "unknown";
}

std::string_view to_string(GenerationRule rule) noexcept {
  switch (rule) {
    case GenerationRule::kInteger: return "integer";
    case GenerationRule::kFloat: return "float";
    case GenerationRule::kBool: return "bool";
    case GenerationRule::kString: return "string";
    case GenerationRule::kNone: return "none";
    case GenerationRule::kBytes: return "bytes";
    case GenerationRule::kList: return "list";
    case GenerationRule::kDictionary: return "dictionary";
    case GenerationRule::kFixedTuple: return "fixedtuple";
    case GenerationRule::kUnion: return "union";
    case GenerationRule::kRecord: return "record";
  }
  return "unknown";
}

AliasCycleError::AliasCycleError(std::vector<std::string> chain)
    : Error("alias-cycle",
            [&] {
              std::string msg = "alias cycle: ";
              for (std::size_t i = 0; i < chain.size(); ++i) {
                if (i > 0) msg += " -> ";
                msg += chain[i];
              }
              return msg;
            }()),
      chain_(std::move(chain)) {}

Registry Registry::with_base_types() {
  Registry reg;
  reg.add_nonparametric_type("integer", GenerationRule::kInteger);
  reg.add_alias_type("int", "integer");
  reg.add_nonparametric_type("float", GenerationRule::kFloat);
  reg.add_nonparametric_type("bool", GenerationRule::kBool);
  reg.add_nonparametric_type("unicode-codepoint-string",
                             GenerationRule::kString);
  reg.add_alias_type("unicode", "unicode-codepoint-string");
  reg.add_alias_type("str", "unicode-codepoint-string");
  reg.add_alias_type("boolean", "bool");
  reg.add_parametric_type("list", 1, GenerationRule::kList);
  reg.add_parametric_type("dictionary", 2, GenerationRule::kDictionary);
  reg.add_parametric_type("fixedtuple", kVariadic, GenerationRule::kFixedTuple);
  reg.add_nonparametric_type("nonetype", GenerationRule::kNone);
  reg.add_nonparametric_type("bytes", GenerationRule::kBytes);
  return reg;
}

void Registry::check_not_alias(const std::string& name) const {
  if (aliases_.contains(name)) {
    throw RegistrationConflictError("\"" + name +
                                    "\" is already registered as an alias");
  }
}

void Registry::add_nonparametric_type(std::string_view name,
                                      GenerationRule rule) {
  if (name.empty()) throw PreconditionError("type name must not be empty");
  std::string key = to_lower(name);
  check_not_alias(key);
  TypeDescriptor d;
  d.name = key;
  d.kind = TypeKind::kNonparametric;
  d.rule = rule;
  types_.insert_or_assign(std::move(key), std::move(d));
}

void Registry::add_parametric_type(std::string_view name, Arity arity,
                                   GenerationRule rule) {
  if (name.empty()) throw PreconditionError("type name must not be empty");
  if (arity && *arity == 0) {
    throw PreconditionError("parametric type \"" + std::string(name) +
                            "\" needs arity >= 1");
  }
  std::string key = to_lower(name);
  check_not_alias(key);
  TypeDescriptor d;
  d.name = key;
  d.kind = TypeKind::kParametric;
  d.rule = rule;
  d.arity = arity;
  types_.insert_or_assign(std::move(key), std::move(d));
}

void Registry::add_alias_type(std::string_view alias, std::string_view target) {
  const std::string from = to_lower(alias);
  const std::string to = to_lower(target);
  if (from.empty() || to.empty()) {
    throw PreconditionError("alias and target must not be empty");
  }
  if (types_.contains(from)) {
    throw RegistrationConflictError("alias \"" + from +
                                    "\" would shadow a registered type");
  }
  std::vector<std::string> chain{from, to};
  for (std::string cur = to; cur != from;) {
    auto it = aliases_.find(cur);
    if (it == aliases_.end()) {
      aliases_.insert_or_assign(from, to);
      return;
    }
    cur = it->second;
    chain.push_back(cur);
  }
  throw AliasCycleError(std::move(chain));
}

std::string Registry::canonical_name(std::string_view name) const {
  std::string cur = to_lower(name);
  // Acyclic by construction; bound the walk anyway.
  for (std::size_t steps = 0; steps <= aliases_.size(); ++steps) {
    auto it = aliases_.find(cur);
    if (it == aliases_.end()) return cur;
    cur = it->second;
  }
  throw InternalError("alias chain from \"" + std::string(name) +
                      "\" does not terminate");
}

const TypeDescriptor* Registry::find(std::string_view name) const {
  auto it = types_.find(canonical_name(name));
  return it == types_.end() ? nullptr : &it->second;
}

bool Registry::contains(std::string_view name) const {
  return find(name) != nullptr;
}

const TypeDescriptor& Registry::resolve(std::string_view name) const {
  if (const TypeDescriptor* d = find(name)) return *d;
  throw UnresolvedTypeError(to_lower(name),
                            "unresolved type \"" + to_lower(name) + "\"");
}

const TypeDescriptor& Registry::resolve(const TypeExpression& expr) const {
  if (expr.is_anonymous_union()) {
    const std::string name = expr.to_string();
    auto it = types_.find(name);
    if (it == types_.end()) {
      throw UnresolvedTypeError(name, "unresolved type \"" + name +
                                          "\" (anonymous union not registered)");
    }
    return it->second;
  }
  const TypeDescriptor& d = resolve(expr.head);
  const std::size_t n = expr.args.size();
  bool arity_ok;
  std::string expected;
  if (d.kind == TypeKind::kParametric) {
    arity_ok = d.arity ? n == *d.arity : n >= 1;
    expected = d.arity ? std::to_string(*d.arity) : "at least 1";
  } else {
    arity_ok = n == 0;
    expected = "0";
  }
  if (!arity_ok) {
    const std::string text = expr.to_string();
    throw UnresolvedTypeError(text, "type \"" + text + "\": \"" + d.name +
                                        "\" takes " + expected +
                                        " argument(s), got " +
                                        std::to_string(n));
  }
  for (const auto& arg : expr.args) resolve(arg);
  return d;
}

bool Registry::resolves(const TypeExpression& expr) const noexcept {
  try {
    resolve(expr);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void Registry::register_union(std::string_view name,
                              const std::vector<TypeExpression>& members,
                              std::vector<std::uint64_t> weights) {
  const std::string key = to_lower(name);
  if (key.empty()) throw PreconditionError("union name must not be empty");
  if (members.size() < 2) {
    throw PreconditionError("union \"" + key + "\" needs at least 2 members");
  }
  if (!weights.empty()) {
    if (weights.size() != members.size()) {
      throw PreconditionError("union \"" + key +
                              "\": one weight per member required");
    }
    if (std::find(weights.begin(), weights.end(), 0u) != weights.end()) {
      throw PreconditionError("union \"" + key + "\": weights must be positive");
    }
  }
  for (const auto& m : members) {
    if (m.head == key || (m.is_anonymous_union() && m.to_string() == key)) {
      throw UnsupportedRecursionError("union \"" + key +
                                      "\" lists itself as a member");
    }
    resolve(m);
  }
  check_not_alias(key);
  TypeDescriptor d;
  d.name = key;
  d.kind = TypeKind::kUnion;
  d.rule = GenerationRule::kUnion;
  d.members = members;
  d.weights = std::move(weights);
  types_.insert_or_assign(key, std::move(d));
}

void Registry::register_union(std::string_view name,
                              const std::vector<std::string>& member_names) {
  std::vector<TypeExpression> members;
  members.reserve(member_names.size());
  for (const auto& m : member_names) {
    members.push_back(parse_type_expression(m));
  }
  register_union(name, members);
}

bool Registry::reaches(const TypeExpression& expr, const std::string& target,
                       std::vector<std::string>& visiting) const {
  for (const auto& arg : expr.args) {
    if (reaches(arg, target, visiting)) return true;
  }
  if (expr.is_anonymous_union()) return false;
  const std::string name = canonical_name(expr.head);
  if (name == target) return true;
  if (std::find(visiting.begin(), visiting.end(), name) != visiting.end()) {
    return false;
  }
  auto it = types_.find(name);
  if (it == types_.end()) return false;
  visiting.push_back(name);
  for (const auto& f : it->second.fields) {
    if (reaches(f.type, target, visiting)) return true;
  }
  for (const auto& m : it->second.members) {
    if (reaches(m, target, visiting)) return true;
  }
  return false;
}

void Registry::register_record(std::string_view qualified_name,
                               std::vector<FieldDecl> fields) {
  const std::string key = to_lower(qualified_name);
  if (key.empty()) throw PreconditionError("record name must not be empty");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (fields[i].name == fields[j].name) {
        throw PreconditionError("record \"" + key + "\": duplicate field \"" +
                                fields[i].name + "\"");
      }
    }
  }
  for (const auto& f : fields) {
    std::vector<std::string> visiting;
    if (reaches(f.type, key, visiting)) {
      throw UnsupportedRecursionError(
          "record \"" + key + "\" field \"" + f.name + "\" of type \"" +
          f.type.to_string() +
          "\" refers back to the record (self-referential or mutually "
          "recursive classes are not supported)");
    }
  }
  for (const auto& f : fields) {
    try {
      resolve(f.type);
    } catch (const UnresolvedTypeError& e) {
      throw UnresolvedTypeError(e.name(), "record \"" + key + "\" field \"" +
                                              f.name + "\": " + e.what());
    }
  }
  check_not_alias(key);
  if (auto it = types_.find(key); it != types_.end() &&
                                  it->second.kind == TypeKind::kRecord &&
                                  it->second.fields != fields) {
    warnings_.push_back("record \"" + key +
                        "\" re-registered with different fields");
  }
  TypeDescriptor d;
  d.name = key;
  d.kind = TypeKind::kRecord;
  d.rule = GenerationRule::kRecord;
  d.fields = std::move(fields);
  types_.insert_or_assign(key, std::move(d));
}

bool Registry::ensure_anonymous_unions(const TypeExpression& expr) {
  bool args_ok = true;
  for (const auto& arg : expr.args) {
    args_ok = ensure_anonymous_unions(arg) && args_ok;
  }
  if (expr.is_anonymous_union() && args_ok) {
    const std::string name = expr.to_string();
    if (!types_.contains(name)) register_union(name, expr.args);
  }
  return resolves(expr);
}

std::vector<const TypeDescriptor*> Registry::descriptors() const {
  std::vector<const TypeDescriptor*> out;
  out.reserve(types_.size());
  for (const auto& [_, d] : types_) out.push_back(&d);
  return out;
}

}  // namespace typeseed
