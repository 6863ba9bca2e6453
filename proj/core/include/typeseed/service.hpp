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

#ifndef TYPESEED_SERVICE_HPP_
#define TYPESEED_SERVICE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "typeseed/registry.hpp"
#include "typeseed/rng.hpp"

namespace typeseed {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  std::uint16_t port = 8080;
  std::uint64_t seed = 1;
  std::size_t max_examples_per_request = 10'000;
};

struct ServiceResponse {
  int status = 200;
  std::string body;  // JSON
};

// Registration and example generation over HTTP.
//
//   POST /seed      {"seed": N}
//   POST /unions    {"name": str, "members": [type, ...], "weights"?: [N, ...]}
//   POST /records   {"qualified_name": str, "fields": [{"name", "type"}, ...]}
//   POST /typeinfo  TypeInfo document, optional "max_iters"
//   POST /examples  {"type": type, "n": N}  -> [wire value, ...]
//   GET  /types
//
// Errors answer 4xx/5xx with {"error": {"kind": ..., "message": ...}}.
// Mutations and state advancement are serialized; the response transcript is
// a pure function of the seed and the ordered request sequence.
class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Dispatches one request without any network I/O.
  ServiceResponse handle(std::string_view method, std::string_view path,
                         std::string_view body);

  // Binds host:port and serves until stop(). Returns false if binding fails.
  bool listen();
  // Binds an ephemeral port and returns it (0 on failure); call listen_after_bind().
  int bind_to_any_port();
  bool listen_after_bind();
  void stop();

  const ServiceConfig& config() const noexcept { return config_; }

 private:
  ServiceResponse post_seed(std::string_view body);
  ServiceResponse post_unions(std::string_view body);
  ServiceResponse post_records(std::string_view body);
  ServiceResponse post_typeinfo(std::string_view body);
  ServiceResponse post_examples(std::string_view body);
  ServiceResponse get_types() const;

  ServiceConfig config_;
  Registry registry_;
  RandomState state_;
  mutable std::shared_mutex mutex_;

  struct Http;
  std::unique_ptr<Http> http_;
};

}  // namespace typeseed

#endif  // TYPESEED_SERVICE_HPP_
