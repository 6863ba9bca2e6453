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

#include "json_io.hpp"

namespace typeseed::json_io {

Json to_json(const RegistrationReport& report) {
  Json admitted = Json::array();
  for (const auto& a : report.admitted) {
    admitted.push_back({{"class", a.class_name}, {"pass", a.pass}});
  }
  Json rejected = Json::array();
  for (const auto& r : report.rejected) {
    Json entry = {{"class", r.class_name}, {"missing", r.missing}};
    if (!r.reason.empty()) entry["reason"] = r.reason;
    rejected.push_back(std::move(entry));
  }
  return {{"admitted", std::move(admitted)},
          {"rejected", std::move(rejected)},
          {"iterations_used", report.iterations_used},
          {"fixed_point_reached", report.fixed_point_reached}};
}

Json to_json(const FunctionSignature& f) {
  Json params = Json::array();
  for (const auto& p : f.params) {
    params.push_back({{"name", p.name}, {"type", p.type.to_string()}});
  }
  return {{"qualified_name", f.qualified_name},
          {"params", std::move(params)},
          {"return", f.return_type.to_string()}};
}

Json to_json(const TypeDescriptor& d) {
  Json j = {{"name", d.name}, {"kind", std::string(to_string(d.kind))}};
  switch (d.kind) {
    case TypeKind::kParametric:
      if (d.arity) {
        j["arity"] = *d.arity;
      } else {
        j["arity"] = "variadic";
      }
      break;
    case TypeKind::kUnion: {
      Json members = Json::array();
      for (const auto& m : d.members) members.push_back(m.to_string());
      j["members"] = std::move(members);
      if (!d.weights.empty()) j["weights"] = d.weights;
      break;
    }
    case TypeKind::kRecord: {
      Json fields = Json::array();
      for (const auto& f : d.fields) {
        fields.push_back({{"name", f.name}, {"type", f.type.to_string()}});
      }
      j["fields"] = std::move(fields);
      break;
    }
    case TypeKind::kNonparametric:
      break;
  }
  return j;
}

Json error_body(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace typeseed::json_io
