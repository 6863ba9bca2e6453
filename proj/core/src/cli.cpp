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

#include "typeseed/cli.hpp"

#include <csignal>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "typeseed/errors.hpp"
#include "typeseed/generate.hpp"
#include "typeseed/pipeline.hpp"
#include "typeseed/service.hpp"
#include "typeseed/wire.hpp"
#include "wire_json.hpp"

namespace typeseed {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string type;
  std::size_t count = 1;
  std::optional<std::uint64_t> seed;
  std::string typeinfo;
  std::vector<std::string> unions;
  std::string format = "jsonl";
  std::size_t max_iters = kDefaultMaxIterations;
  std::string host = "127.0.0.1";
  std::uint16_t port = 8080;
  std::size_t max_examples = 10'000;
};

std::uint64_t resolve_seed(const Options& opts) {
  if (opts.seed) return *opts.seed;
  if (const char* env = std::getenv(kSeedEnvVar); env && *env) {
    BigInt parsed;
    if (!parse_decimal(env, parsed) || parsed < 0 ||
        parsed > std::numeric_limits<std::uint64_t>::max()) {
      throw PreconditionError(std::string(kSeedEnvVar) +
                              " must be an unsigned 64-bit decimal, got \"" +
                              env + "\"");
    }
    return parsed.convert_to<std::uint64_t>();
  }
  return 1;
}

// NAME=T1,T2,... with commas inside brackets belonging to the member type.
void register_union_flag(Registry& registry, const std::string& flag) {
  const auto eq = flag.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw PreconditionError("--union expects NAME=T1,T2,..., got \"" + flag + "\"");
  }
  std::vector<TypeExpression> members;
  std::string current;
  int depth = 0;
  for (char c : flag.substr(eq + 1)) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      members.push_back(parse_type_expression(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  members.push_back(parse_type_expression(current));
  registry.register_union(flag.substr(0, eq), members);
}

Registry prepared_registry(const Options& opts, RegistrationReport* report) {
  Registry registry = Registry::with_base_types();
  if (!opts.typeinfo.empty()) {
    const TypeInfo info = load_type_info(opts.typeinfo);
    RegistrationReport r =
        register_types_fixed_point(registry, info, opts.max_iters);
    if (report) *report = std::move(r);
  }
  for (const auto& u : opts.unions) register_union_flag(registry, u);
  return registry;
}

int cmd_gen(const Options& opts, std::ostream& out) {
  Registry registry = prepared_registry(opts, nullptr);
  const TypeExpression type = parse_type_expression(opts.type);
  registry.ensure_anonymous_unions(type);
  auto [values, _] =
      generate_examples(registry, type, opts.count, RandomState(resolve_seed(opts)));
  if (opts.format == "json") {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(wire::to_json(v));
    out << arr.dump() << '\n';
  } else {
    for (const auto& v : values) out << encode_value(v) << '\n';
  }
  return 0;
}

int cmd_register(const Options& opts, std::ostream& out) {
  RegistrationReport report;
  prepared_registry(opts, &report);
  out << json_io::to_json(report).dump(2) << '\n';
  return 0;
}

int cmd_appropriate(const Options& opts, std::ostream& out) {
  Registry registry = prepared_registry(opts, nullptr);
  const TypeInfo info = load_type_info(opts.typeinfo);
  const auto functions = extract_appropriate_functions(registry, info);
  if (opts.format == "json") {
    Json arr = Json::array();
    for (const auto& f : functions) arr.push_back(json_io::to_json(f));
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& f : functions) out << json_io::to_json(f).dump() << '\n';
  }
  return 0;
}

Service* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

int cmd_serve(const Options& opts, std::ostream& out, std::ostream& err) {
  ServiceConfig config;
  config.host = opts.host;
  config.port = opts.port;
  config.seed = resolve_seed(opts);
  config.max_examples_per_request = opts.max_examples;
  Service service(config);
  g_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  out << "listening on " << config.host << ":" << config.port << std::endl;
  const bool ok = service.listen();
  g_service = nullptr;
  if (!ok) {
    err << "error: cannot listen on " << config.host << ":" << config.port << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Type-directed example generator for annotated Python code",
               "typeseed"};
  app.require_subcommand(1);
  Options opts;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "jsonl"}));
  };
  auto add_iters = [&](CLI::App* sub) {
    sub->add_option("--max-iters", opts.max_iters,
                    "Maximum registration passes")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate example values of a type");
  gen->add_option("--type", opts.type, "Type expression, e.g. list[int]")
      ->required();
  gen->add_option("--n", opts.count, "Number of values");
  gen->add_option("--seed", opts.seed, "Seed (default: $TYPESEED_SEED or 1)");
  gen->add_option("--typeinfo", opts.typeinfo, "TypeInfo file to register first")
      ->check(CLI::ExistingFile);
  gen->add_option("--union", opts.unions, "Register a union NAME=T1,T2,...");
  add_format(gen);
  add_iters(gen);

  CLI::App* reg = app.add_subcommand(
      "register", "Run fixed-point class registration and print the report");
  reg->add_option("--typeinfo", opts.typeinfo, "TypeInfo file")
      ->required()
      ->check(CLI::ExistingFile);
  add_iters(reg);

  CLI::App* appr = app.add_subcommand(
      "appropriate", "List functions whose every type is registered");
  appr->add_option("--typeinfo", opts.typeinfo, "TypeInfo file")
      ->required()
      ->check(CLI::ExistingFile);
  add_iters(appr);
  add_format(appr);

  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", opts.port, "Port");
  serve->add_option("--host", opts.host, "Bind address");
  serve->add_option("--seed", opts.seed, "Seed (default: $TYPESEED_SEED or 1)");
  serve->add_option("--max-examples", opts.max_examples,
                    "Per-request example limit")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen) return cmd_gen(opts, out);
    if (*reg) return cmd_register(opts, out);
    if (*appr) return cmd_appropriate(opts, out);
    if (*serve) return cmd_serve(opts, out, err);
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace typeseed
