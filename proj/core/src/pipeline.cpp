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

#include "typeseed/pipeline.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "typeseed/errors.hpp"

namespace typeseed {
namespace {

using nlohmann::json;

void collect(const TypeExpression& e, std::set<TypeExpression>& out) {
  out.insert(e);
  for (const auto& arg : e.args) collect(arg, out);
}

// The unresolvable members of `types`, registering anonymous unions first.
std::vector<std::string> missing_types(Registry& registry,
                                       const std::set<TypeExpression>& types) {
  std::vector<std::string> missing;
  for (const auto& t : types) {
    if (!registry.ensure_anonymous_unions(t)) missing.push_back(t.to_string());
  }
  return missing;
}

std::set<TypeExpression> class_types(const ClassInfo& c) {
  std::set<TypeExpression> types;
  for (const auto& f : c.fields) collect(f.type, types);
  for (const auto& m : c.methods) {
    auto mt = types_of(m);
    types.insert(mt.begin(), mt.end());
  }
  return types;
}

// JSON schema helpers. Paths look like `$.classes[0].fields[1].type`.
const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw IngestError(path + ": missing required field \"" + key + "\"");
  }
  return *it;
}

std::string require_string(const json& obj, const char* key,
                           const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) {
    throw IngestError(path + "." + key + ": expected a string");
  }
  return v.get<std::string>();
}

const json& require_array(const json& obj, const char* key,
                          const std::string& path, bool optional) {
  static const json kEmpty = json::array();
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (optional) return kEmpty;
    throw IngestError(path + ": missing required field \"" + key + "\"");
  }
  if (!it->is_array()) {
    throw IngestError(path + "." + key + ": expected an array");
  }
  return *it;
}

void require_object(const json& v, const std::string& path) {
  if (!v.is_object()) throw IngestError(path + ": expected an object");
}

TypeExpression parse_type_field(const json& obj, const std::string& path,
                                const std::string& owner, const char* key) {
  const std::string text = require_string(obj, key, path);
  try {
    return parse_type_expression(text);
  } catch (const SyntaxError& e) {
    throw IngestError(path + "." + key + " (in " + owner + "): " + e.what());
  }
}

std::vector<Parameter> parse_params(const json& params, const std::string& path,
                                    const std::string& owner) {
  std::vector<Parameter> out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    require_object(params[i], p);
    Parameter param{require_string(params[i], "name", p),
                    parse_type_field(params[i], p, owner, "type")};
    for (const auto& prev : out) {
      if (prev.name == param.name) {
        throw IngestError(p + ".name: duplicate parameter \"" + param.name +
                          "\" in " + owner);
      }
    }
    out.push_back(std::move(param));
  }
  return out;
}

FunctionSignature parse_signature(const json& j, const std::string& path) {
  require_object(j, path);
  FunctionSignature f;
  f.qualified_name = to_lower(require_string(j, "qualified_name", path));
  if (f.qualified_name.empty()) {
    throw IngestError(path + ".qualified_name: must not be empty");
  }
  const std::string owner = "function " + f.qualified_name;
  f.params =
      parse_params(require_array(j, "params", path, false), path + ".params", owner);
  f.return_type = parse_type_field(j, path, owner, "return");
  return f;
}

ClassInfo parse_class(const json& j, const std::string& path) {
  require_object(j, path);
  ClassInfo c;
  c.qualified_name = to_lower(require_string(j, "qualified_name", path));
  if (c.qualified_name.empty()) {
    throw IngestError(path + ".qualified_name: must not be empty");
  }
  const std::string owner = "class " + c.qualified_name;
  for (auto& p : parse_params(require_array(j, "fields", path, false),
                              path + ".fields", owner)) {
    c.fields.push_back({std::move(p.name), std::move(p.type)});
  }
  const json& methods = require_array(j, "methods", path, true);
  for (std::size_t i = 0; i < methods.size(); ++i) {
    c.methods.push_back(
        parse_signature(methods[i], path + ".methods[" + std::to_string(i) + "]"));
  }
  return c;
}

}  // namespace

std::set<TypeExpression> types_of(const FunctionSignature& f) {
  std::set<TypeExpression> out;
  for (const auto& p : f.params) collect(p.type, out);
  collect(f.return_type, out);
  return out;
}

RegistrationReport register_types_fixed_point(Registry& registry,
                                              const TypeInfo& info,
                                              std::size_t max_iterations) {
  if (max_iterations == 0) {
    throw PreconditionError("max_iterations must be at least 1");
  }
  RegistrationReport report;
  std::set<std::string> admitted;
  std::vector<std::string> failure(info.classes.size());

  for (std::size_t pass = 1; pass <= max_iterations; ++pass) {
    report.iterations_used = pass;
    bool changed = false;
    for (std::size_t i = 0; i < info.classes.size(); ++i) {
      const ClassInfo& c = info.classes[i];
      if (admitted.contains(c.qualified_name)) continue;
      if (!missing_types(registry, class_types(c)).empty()) continue;
      try {
        registry.register_record(c.qualified_name, c.fields);
      } catch (const Error& e) {
        failure[i] = e.what();
        continue;
      }
      failure[i].clear();
      admitted.insert(c.qualified_name);
      report.admitted.push_back({c.qualified_name, pass});
      changed = true;
    }
    if (!changed) {
      report.fixed_point_reached = true;
      break;
    }
  }

  for (std::size_t i = 0; i < info.classes.size(); ++i) {
    const ClassInfo& c = info.classes[i];
    if (admitted.contains(c.qualified_name)) continue;
    report.rejected.push_back(
        {c.qualified_name, missing_types(registry, class_types(c)), failure[i]});
  }
  return report;
}

std::vector<FunctionSignature> extract_appropriate_functions(
    Registry& registry, const TypeInfo& info) {
  std::vector<FunctionSignature> out;
  for (const auto& f : info.functions) {
    if (missing_types(registry, types_of(f)).empty()) out.push_back(f);
  }
  return out;
}

TypeInfo parse_type_info(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw IngestError(std::string("$: invalid JSON: ") + e.what());
  }
  require_object(doc, "$");
  TypeInfo info;
  const json& classes = require_array(doc, "classes", "$", true);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    info.classes.push_back(
        parse_class(classes[i], "$.classes[" + std::to_string(i) + "]"));
  }
  const json& functions = require_array(doc, "functions", "$", true);
  for (std::size_t i = 0; i < functions.size(); ++i) {
    info.functions.push_back(
        parse_signature(functions[i], "$.functions[" + std::to_string(i) + "]"));
  }
  return info;
}

TypeInfo load_type_info(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open TypeInfo file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_type_info(buf.str());
}

}  // namespace typeseed
