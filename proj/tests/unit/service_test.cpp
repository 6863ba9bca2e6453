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

#include <fstream>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "typeseed/wire.hpp"

namespace typeseed {
namespace {

using nlohmann::json;

std::string read_fixture() {
  std::ifstream in(TYPESEED_TEST_DATA_DIR "/classtest.json");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class ServiceTest : public ::testing::Test {
 protected:
  ServiceResponse post(std::string_view path, const json& body) {
    return service.handle("POST", path, body.dump());
  }
  Service service{ServiceConfig{}};
};

TEST_F(ServiceTest, UnionThenExamples) {
  auto r = post("/unions", {{"name", "intfloatstr"}, {"members", {"int", "float", "str"}}});
  ASSERT_EQ(r.status, 200) << r.body;
  r = post("/examples", {{"type", "intfloatstr"}, {"n", 100}});
  ASSERT_EQ(r.status, 200) << r.body;
  const json arr = json::parse(r.body);
  ASSERT_EQ(arr.size(), 100u);
  for (const auto& v : arr) {
    const Value value = decode_value(v.dump());
    EXPECT_TRUE(value.is<BigInt>() || value.is<FloatValue>() ||
                value.is<CodepointString>());
  }
}

TEST_F(ServiceTest, StateAdvancesAndReplays) {
  auto session = [](Service& s) {
    std::vector<std::string> out;
    out.push_back(s.handle("POST", "/seed", R"({"seed":1})").body);
    out.push_back(s.handle("POST", "/examples", R"({"type":"list[int]","n":5})").body);
    out.push_back(s.handle("POST", "/examples", R"({"type":"list[int]","n":5})").body);
    return out;
  };
  const auto first = session(service);
  EXPECT_NE(first[1], first[2]);
  Service other{ServiceConfig{}};
  EXPECT_EQ(session(other), first);
  EXPECT_EQ(session(service), first);
}

TEST_F(ServiceTest, RecordsAndTypes) {
  auto r = post("/records", {{"qualified_name", "m.point"},
                             {"fields", {{{"name", "x"}, {"type", "int"}},
                                         {{"name", "y"}, {"type", "int"}}}}});
  ASSERT_EQ(r.status, 200) << r.body;
  r = service.handle("GET", "/types", "");
  ASSERT_EQ(r.status, 200);
  const json types = json::parse(r.body);
  EXPECT_EQ(types["aliases"]["int"], "integer");
  bool found = false;
  for (const auto& t : types["types"]) found |= t["name"] == "m.point";
  EXPECT_TRUE(found);
}

TEST_F(ServiceTest, TypeInfoReportsAppropriateFunctions) {
  auto r = service.handle("POST", "/typeinfo", read_fixture());
  ASSERT_EQ(r.status, 200) << r.body;
  const json body = json::parse(r.body);
  EXPECT_EQ(body["report"]["admitted"].size(), 2u);
  ASSERT_EQ(body["appropriate"].size(), 2u);
  EXPECT_EQ(body["appropriate"][0]["qualified_name"], "classtest.use_a");
  r = post("/examples", {{"type", "classtest.testclassb"}, {"n", 3}});
  EXPECT_EQ(r.status, 200) << r.body;
}

TEST_F(ServiceTest, ErrorStatuses) {
  EXPECT_EQ(post("/examples", {{"type", "nosuch"}, {"n", 1}}).status, 400);
  EXPECT_EQ(post("/examples", {{"type", "int"}, {"n", 10'001}}).status, 413);
  EXPECT_EQ(post("/examples", {{"type", "int"}}).status, 400);
  EXPECT_EQ(service.handle("POST", "/examples", "{").status, 400);
  EXPECT_EQ(post("/unions", {{"name", "u"}, {"members", {"int"}}}).status, 400);
  EXPECT_EQ(post("/records", {{"qualified_name", "int"},
                              {"fields", {{{"name", "x"}, {"type", "str"}}}}})
                .status,
            409);
  EXPECT_EQ(service.handle("GET", "/nope", "").status, 404);
  EXPECT_EQ(service.handle("DELETE", "/types", "").status, 404);
  const json err = json::parse(post("/examples", {{"type", "nosuch"}, {"n", 1}}).body);
  EXPECT_EQ(err["error"]["kind"], "unresolved-type");
}

TEST(ServiceHttp, ServesOverLoopback) {
  Service service{ServiceConfig{}};
  const int port = service.bind_to_any_port();
  ASSERT_GT(port, 0);
  std::thread server([&] { service.listen_after_bind(); });
  httplib::Client client("127.0.0.1", port);
  auto res = client.Post("/examples", R"({"type":"fixedtuple[int,str]","n":4})",
                         "application/json");
  service.stop();
  server.join();
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body).size(), 4u);
}

}  // namespace
}  // namespace typeseed
