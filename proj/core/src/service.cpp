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

#include "typeseed/service.hpp"

#include <mutex>

#include <httplib.h>

#include "json_io.hpp"
#include "typeseed/errors.hpp"
#include "typeseed/generate.hpp"
#include "typeseed/pipeline.hpp"
#include "wire_json.hpp"

namespace typeseed {
namespace {

using Json = nlohmann::ordered_json;

ServiceResponse ok(const Json& body) { return {200, body.dump()}; }

ServiceResponse error(int status, const std::string& kind,
                      const std::string& message) {
  return {status, json_io::error_body(kind, message).dump()};
}

int status_for(const Error& e) {
  const std::string& k = e.kind();
  if (k == "alias-cycle" || k == "registration-conflict" ||
      k == "unsupported-recursion") {
    return 409;
  }
  if (k == "internal") return 500;
  return 400;
}

Json parse_body(std::string_view body) {
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw PreconditionError(std::string("request body is not valid JSON: ") +
                            e.what());
  }
  if (!j.is_object()) throw PreconditionError("request body must be an object");
  return j;
}

const Json& member(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw PreconditionError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string string_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) {
    throw PreconditionError(std::string("field \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

std::uint64_t unsigned_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_unsigned()) {
    throw PreconditionError(std::string("field \"") + key +
                            "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

struct Service::Http {
  httplib::Server server;
};

Service::Service(ServiceConfig config)
    : config_(std::move(config)),
      registry_(Registry::with_base_types()),
      state_(config_.seed),
      http_(std::make_unique<Http>()) {
  if (config_.max_examples_per_request == 0) {
    throw PreconditionError("max_examples_per_request must be at least 1");
  }
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    ServiceResponse r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  for (const char* path :
       {"/seed", "/unions", "/records", "/typeinfo", "/examples"}) {
    http_->server.Post(path, forward);
  }
  http_->server.Get("/types", forward);
}

Service::~Service() { stop(); }

ServiceResponse Service::handle(std::string_view method, std::string_view path,
                                std::string_view body) {
  try {
    if (method == "GET" && path == "/types") return get_types();
    if (method == "POST") {
      if (path == "/seed") return post_seed(body);
      if (path == "/unions") return post_unions(body);
      if (path == "/records") return post_records(body);
      if (path == "/typeinfo") return post_typeinfo(body);
      if (path == "/examples") return post_examples(body);
    }
    return error(404, "not-found",
                 std::string(method) + " " + std::string(path) + " is not an endpoint");
  } catch (const Error& e) {
    return error(status_for(e), e.kind(), e.what());
  } catch (const std::exception& e) {
    return error(500, "internal", e.what());
  }
}

ServiceResponse Service::post_seed(std::string_view body) {
  const Json req = parse_body(body);
  const std::uint64_t seed = unsigned_member(req, "seed");
  std::unique_lock lock(mutex_);
  state_ = RandomState(seed);
  return ok({{"seed", seed}});
}

ServiceResponse Service::post_unions(std::string_view body) {
  const Json req = parse_body(body);
  const std::string name = string_member(req, "name");
  const Json& members = member(req, "members");
  if (!members.is_array()) throw PreconditionError("\"members\" must be an array");
  std::vector<TypeExpression> exprs;
  for (const auto& m : members) {
    if (!m.is_string()) throw PreconditionError("union members must be strings");
    exprs.push_back(parse_type_expression(m.get<std::string>()));
  }
  std::vector<std::uint64_t> weights;
  if (auto it = req.find("weights"); it != req.end()) {
    if (!it->is_array()) throw PreconditionError("\"weights\" must be an array");
    for (const auto& w : *it) {
      if (!w.is_number_unsigned()) {
        throw PreconditionError("weights must be positive integers");
      }
      weights.push_back(w.get<std::uint64_t>());
    }
  }
  std::unique_lock lock(mutex_);
  registry_.register_union(name, exprs, std::move(weights));
  return ok({{"registered", to_lower(name)}});
}

ServiceResponse Service::post_records(std::string_view body) {
  const Json req = parse_body(body);
  const std::string name = string_member(req, "qualified_name");
  const Json& fields = member(req, "fields");
  if (!fields.is_array()) throw PreconditionError("\"fields\" must be an array");
  std::vector<FieldDecl> decls;
  for (const auto& f : fields) {
    if (!f.is_object()) throw PreconditionError("fields must be objects");
    decls.push_back({string_member(f, "name"),
                     parse_type_expression(string_member(f, "type"))});
  }
  std::unique_lock lock(mutex_);
  const std::size_t warnings_before = registry_.warnings().size();
  for (const auto& d : decls) registry_.ensure_anonymous_unions(d.type);
  registry_.register_record(name, std::move(decls));
  Json resp = {{"registered", to_lower(name)}};
  const auto& warnings = registry_.warnings();
  if (warnings.size() > warnings_before) {
    resp["warnings"] = std::vector<std::string>(
        warnings.begin() + static_cast<std::ptrdiff_t>(warnings_before),
        warnings.end());
  }
  return ok(resp);
}

ServiceResponse Service::post_typeinfo(std::string_view body) {
  const Json req = parse_body(body);
  std::size_t max_iters = kDefaultMaxIterations;
  if (req.contains("max_iters")) {
    max_iters = unsigned_member(req, "max_iters");
  }
  const TypeInfo info = parse_type_info(body);
  std::unique_lock lock(mutex_);
  const RegistrationReport report =
      register_types_fixed_point(registry_, info, max_iters);
  Json appropriate = Json::array();
  for (const auto& f : extract_appropriate_functions(registry_, info)) {
    appropriate.push_back(json_io::to_json(f));
  }
  return ok({{"report", json_io::to_json(report)},
             {"appropriate", std::move(appropriate)}});
}

ServiceResponse Service::post_examples(std::string_view body) {
  const Json req = parse_body(body);
  const TypeExpression type = parse_type_expression(string_member(req, "type"));
  const std::uint64_t n = unsigned_member(req, "n");
  if (n > config_.max_examples_per_request) {
    return error(413, "too-many-examples",
                 "n=" + std::to_string(n) + " exceeds the per-request limit of " +
                     std::to_string(config_.max_examples_per_request));
  }
  std::unique_lock lock(mutex_);
  registry_.ensure_anonymous_unions(type);
  auto [values, next] = generate_examples(registry_, type, n, state_);
  state_ = next;
  Json out = Json::array();
  for (const auto& v : values) out.push_back(wire::to_json(v));
  return ok(out);
}

ServiceResponse Service::get_types() const {
  std::shared_lock lock(mutex_);
  Json types = Json::array();
  for (const TypeDescriptor* d : registry_.descriptors()) {
    types.push_back(json_io::to_json(*d));
  }
  Json aliases = Json::object();
  for (const auto& [from, to] : registry_.aliases()) aliases[from] = to;
  return ok({{"types", std::move(types)}, {"aliases", std::move(aliases)}});
}

bool Service::listen() {
  return http_->server.listen(config_.host, config_.port);
}

int Service::bind_to_any_port() {
  const int port = http_->server.bind_to_any_port(config_.host);
  return port < 0 ? 0 : port;
}

bool Service::listen_after_bind() { return http_->server.listen_after_bind(); }

void Service::stop() {
  if (http_) http_->server.stop();
}

}  // namespace typeseed
