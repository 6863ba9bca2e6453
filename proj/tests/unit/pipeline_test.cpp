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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "typeseed/errors.hpp"
#include "typeseed/generate.hpp"

namespace typeseed {
namespace {

TypeExpression T(std::string_view text) { return parse_type_expression(text); }

TypeInfo fixture() { return load_type_info(TYPESEED_TEST_DATA_DIR "/classtest.json"); }

std::vector<std::string> names(const std::vector<FunctionSignature>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.qualified_name);
  return out;
}

TEST(TypesOf, UseA) {
  FunctionSignature f{"classtest.use_a",
                      {{"a", T("classtest.testclassa")}},
                      T("fixedtuple[float, list[int]]")};
  const std::set<TypeExpression> expected = {
      T("classtest.testclassa"), T("fixedtuple[float,list[int]]"), T("float"),
      T("list[int]"), T("int")};
  EXPECT_EQ(types_of(f), expected);
}

TEST(TypesOf, NoParamsAndDeduplication) {
  EXPECT_EQ(types_of({"f", {}, T("nonetype")}),
            (std::set<TypeExpression>{T("nonetype")}));
  EXPECT_EQ(types_of({"f", {{"x", T("int")}, {"y", T("int")}}, T("int")}),
            (std::set<TypeExpression>{T("int")}));
}

TEST(LoadTypeInfo, Fixture) {
  const TypeInfo info = fixture();
  ASSERT_EQ(info.classes.size(), 2u);
  ASSERT_EQ(info.functions.size(), 2u);
  EXPECT_EQ(info.classes[0].qualified_name, "classtest.testclassa");
  EXPECT_EQ(info.classes[0].fields[1].type, T("list[int]"));
  EXPECT_EQ(info.classes[1].methods.size(), 1u);
  EXPECT_EQ(info.functions[1].return_type, T("fixedtuple[int,classtest.testclassa]"));
}

TEST(ParseTypeInfo, EmptyObject) {
  const TypeInfo info = parse_type_info("{}");
  EXPECT_TRUE(info.classes.empty());
  EXPECT_TRUE(info.functions.empty());
}

TEST(ParseTypeInfo, MalformedTypeNamesTheFunction) {
  try {
    parse_type_info(R"({"functions":[{"qualified_name":"m.f",
        "params":[{"name":"x","type":"list["}],"return":"int"}]})");
    FAIL();
  } catch (const IngestError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("m.f"), std::string::npos) << msg;
    EXPECT_NE(msg.find("$.functions[0].params[0].type"), std::string::npos) << msg;
  }
}

TEST(ParseTypeInfo, SchemaViolationsNameThePath) {
  auto message = [](std::string_view doc) -> std::string {
    try {
      parse_type_info(doc);
    } catch (const IngestError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message("[]").find("$"), std::string::npos);
  EXPECT_NE(message("{").find("invalid JSON"), std::string::npos);
  EXPECT_NE(message(R"({"classes":[{"fields":[]}]})").find("$.classes[0]"),
            std::string::npos);
  EXPECT_NE(message(R"({"classes":[{"qualified_name":"c","fields":[{"name":"x","type":3}]}]})")
                .find("$.classes[0].fields[0].type"),
            std::string::npos);
  EXPECT_NE(message(R"({"functions":[{"qualified_name":"f","params":[
      {"name":"x","type":"int"},{"name":"x","type":"int"}],"return":"int"}]})")
                .find("duplicate"),
            std::string::npos);
}

TEST(FixedPoint, FixtureAdmitsBothClasses) {
  Registry reg = Registry::with_base_types();
  const auto report = register_types_fixed_point(reg, fixture());
  ASSERT_EQ(report.admitted.size(), 2u);
  EXPECT_EQ(report.admitted[0].class_name, "classtest.testclassa");
  EXPECT_EQ(report.admitted[1].class_name, "classtest.testclassb");
  // A is visible to B within the same pass.
  EXPECT_EQ(report.admitted[0].pass, 1u);
  EXPECT_EQ(report.admitted[1].pass, 1u);
  EXPECT_EQ(report.iterations_used, 2u);
  EXPECT_TRUE(report.fixed_point_reached);
  EXPECT_TRUE(report.rejected.empty());
}

TEST(FixedPoint, DependentFirstTakesOnePassPerLevel) {
  TypeInfo info = fixture();
  std::swap(info.classes[0], info.classes[1]);
  Registry reg = Registry::with_base_types();
  const auto report = register_types_fixed_point(reg, info);
  ASSERT_EQ(report.admitted.size(), 2u);
  EXPECT_EQ(report.admitted[0].class_name, "classtest.testclassa");
  EXPECT_EQ(report.admitted[0].pass, 1u);
  EXPECT_EQ(report.admitted[1].class_name, "classtest.testclassb");
  EXPECT_EQ(report.admitted[1].pass, 2u);
  EXPECT_EQ(report.iterations_used, 3u);
  EXPECT_TRUE(report.fixed_point_reached);
}

TEST(FixedPoint, ResultIsOrderIndependent) {
  // A chain c0 <- c1 <- ... <- c4 plus one unresolvable class.
  TypeInfo info;
  info.classes.push_back({"c0", {{"x", T("int")}}, {}});
  for (int i = 1; i < 5; ++i) {
    info.classes.push_back(
        {"c" + std::to_string(i), {{"p", T("c" + std::to_string(i - 1))}}, {}});
  }
  info.classes.push_back({"bad", {{"w", T("weirdtype")}}, {}});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(info.classes.begin(), info.classes.end(), rng);
    Registry reg = Registry::with_base_types();
    const auto report = register_types_fixed_point(reg, info);
    EXPECT_EQ(report.admitted.size(), 5u);
    ASSERT_EQ(report.rejected.size(), 1u);
    EXPECT_EQ(report.rejected[0].class_name, "bad");
    EXPECT_LE(report.iterations_used, 5u);
    for (int i = 0; i < 5; ++i) EXPECT_TRUE(reg.contains("c" + std::to_string(i)));
  }
}

TEST(FixedPoint, UnknownAttributeTypeIsListed) {
  TypeInfo info;
  info.classes.push_back({"m.c", {{"w", T("weirdtype")}}, {}});
  Registry reg = Registry::with_base_types();
  const auto report = register_types_fixed_point(reg, info);
  EXPECT_TRUE(report.admitted.empty());
  ASSERT_EQ(report.rejected.size(), 1u);
  EXPECT_EQ(report.rejected[0].missing, std::vector<std::string>{"weirdtype"});
  EXPECT_FALSE(reg.contains("m.c"));
}

TEST(FixedPoint, MethodTypesGateAdmission) {
  TypeInfo info;
  info.classes.push_back(
      {"m.c", {{"x", T("int")}}, {{"m.c.f", {{"y", T("weirdtype")}}, T("int")}}});
  Registry reg = Registry::with_base_types();
  const auto report = register_types_fixed_point(reg, info);
  EXPECT_TRUE(report.admitted.empty());
  ASSERT_EQ(report.rejected.size(), 1u);
  EXPECT_EQ(report.rejected[0].missing, std::vector<std::string>{"weirdtype"});
}

TEST(FixedPoint, EmptyClassSet) {
  Registry reg = Registry::with_base_types();
  const auto before = reg.descriptors().size();
  const auto report = register_types_fixed_point(reg, TypeInfo{});
  EXPECT_EQ(report.iterations_used, 1u);
  EXPECT_TRUE(report.fixed_point_reached);
  EXPECT_EQ(reg.descriptors().size(), before);
}

TEST(FixedPoint, IterationCapStopsEarly) {
  TypeInfo info;
  for (int i = 3; i >= 1; --i) {
    info.classes.push_back(
        {"c" + std::to_string(i), {{"p", T("c" + std::to_string(i - 1))}}, {}});
  }
  info.classes.push_back({"c0", {{"x", T("int")}}, {}});
  Registry reg = Registry::with_base_types();
  const auto report = register_types_fixed_point(reg, info, 2);
  EXPECT_EQ(report.iterations_used, 2u);
  EXPECT_FALSE(report.fixed_point_reached);
  EXPECT_EQ(report.admitted.size(), 2u);
  EXPECT_EQ(report.rejected.size(), 2u);
  EXPECT_THROW(register_types_fixed_point(reg, info, 0), PreconditionError);
}

TEST(FixedPoint, RecursiveClassIsRejectedWithReason) {
  Registry reg = Registry::with_base_types();
  reg.register_record("m.node", {{"v", T("int")}});
  TypeInfo info;
  info.classes.push_back({"m.node", {{"next", T("list[m.node]")}}, {}});
  const auto report = register_types_fixed_point(reg, info);
  ASSERT_EQ(report.rejected.size(), 1u);
  EXPECT_FALSE(report.rejected[0].reason.empty());
}

TEST(Appropriate, FixtureGivesBothFunctions) {
  Registry reg = Registry::with_base_types();
  const TypeInfo info = fixture();
  register_types_fixed_point(reg, info);
  const auto g = extract_appropriate_functions(reg, info);
  EXPECT_EQ(names(g), (std::vector<std::string>{"classtest.use_a", "classtest.use_b"}));
  for (const auto& f : g) {
    RandomState s(static_cast<std::uint64_t>(f.qualified_name.size()));
    for (const auto& p : f.params) {
      auto d = generate_value(reg, p.type, s);
      s = d.next;
      EXPECT_TRUE(is_member(reg, d.value, p.type));
    }
  }
}

TEST(Appropriate, WithoutRegistrationNothingQualifies) {
  Registry reg = Registry::with_base_types();
  EXPECT_TRUE(extract_appropriate_functions(reg, fixture()).empty());
}

TEST(Appropriate, CallableExcludedAndEmptyInput) {
  Registry reg = Registry::with_base_types();
  TypeInfo info;
  info.functions.push_back({"m.f", {{"cb", T("callable[int]")}}, T("int")});
  info.functions.push_back({"m.g", {{"x", T("union[int|str]")}}, T("nonetype")});
  EXPECT_EQ(names(extract_appropriate_functions(reg, info)),
            std::vector<std::string>{"m.g"});
  EXPECT_TRUE(extract_appropriate_functions(reg, TypeInfo{}).empty());
}

}  // namespace
}  // namespace typeseed
