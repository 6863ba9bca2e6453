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

#include "typeseed/generate.hpp"

#include <gtest/gtest.h>

#include "support/type_gen.hpp"
#include "typeseed/errors.hpp"

namespace typeseed {
namespace {

TypeExpression T(std::string_view text) { return parse_type_expression(text); }

class GenerateTest : public ::testing::Test {
 protected:
  void SetUp() override {
    reg.register_union("intfloatstr", std::vector<std::string>{"int", "float", "str"});
    reg.register_record("classtest.testclassa",
                        {{"a", T("float")}, {"b", T("list[int]")}});
    reg.register_record("classtest.testclassb",
                        {{"a", T("int")}, {"b", T("classtest.testclassa")}});
  }
  Registry reg = Registry::with_base_types();
};

TEST_F(GenerateTest, TupleShape) {
  RandomState s(1);
  for (int i = 0; i < 200; ++i) {
    auto d = generate_value(reg, T("fixedtuple[float,list[int]]"), s);
    s = d.next;
    ASSERT_TRUE(d.value.is<TupleValue>());
    const auto& items = d.value.as<TupleValue>().items;
    ASSERT_EQ(items.size(), 2u);
    EXPECT_TRUE(items[0].is<FloatValue>());
    ASSERT_TRUE(items[1].is<ListValue>());
    for (const auto& x : items[1].as<ListValue>().items) EXPECT_TRUE(x.is<BigInt>());
  }
}

TEST_F(GenerateTest, NestedRecord) {
  auto d = generate_value(reg, T("classtest.testclassb"), RandomState(2));
  ASSERT_TRUE(d.value.is<RecordValue>());
  const auto& r = d.value.as<RecordValue>();
  EXPECT_EQ(r.class_name, "classtest.testclassb");
  ASSERT_EQ(r.fields.size(), 2u);
  EXPECT_EQ(r.fields[0].name, "a");
  EXPECT_TRUE(r.fields[0].value.is<BigInt>());
  ASSERT_TRUE(r.fields[1].value.is<RecordValue>());
  EXPECT_EQ(r.fields[1].value.as<RecordValue>().class_name, "classtest.testclassa");
}

TEST_F(GenerateTest, ListOfNoneHoldsOnlyNone) {
  RandomState s(3);
  for (int i = 0; i < 100; ++i) {
    auto d = generate_value(reg, T("list[nonetype]"), s);
    s = d.next;
    for (const auto& x : d.value.as<ListValue>().items) EXPECT_TRUE(x.is<NoneValue>());
    EXPECT_LE(d.value.as<ListValue>().items.size(), kMaxContainerLength);
  }
}

TEST_F(GenerateTest, DictionaryKeysAreDistinct) {
  RandomState s(4);
  for (int i = 0; i < 500; ++i) {
    auto d = generate_value(reg, T("dictionary[bool,int]"), s);
    s = d.next;
    EXPECT_LE(d.value.as<MapValue>().entries.size(), 2u);
    EXPECT_TRUE(is_member(reg, d.value, T("dictionary[bool,int]")));
  }
}

TEST(ContainerLengthCap, ShrinksWithNesting) {
  EXPECT_EQ(container_length_cap(0), 64u);
  EXPECT_EQ(container_length_cap(1), 16u);
  EXPECT_EQ(container_length_cap(2), 4u);
  EXPECT_EQ(container_length_cap(3), 2u);
  EXPECT_EQ(container_length_cap(40), 2u);
}

TEST_F(GenerateTest, NestedListsRespectCaps) {
  RandomState s(13);
  for (int i = 0; i < 300; ++i) {
    auto d = generate_value(reg, T("list[list[dictionary[int,str]]]"), s);
    s = d.next;
    const auto& outer = d.value.as<ListValue>().items;
    ASSERT_LE(outer.size(), 64u);
    for (const auto& mid : outer) {
      ASSERT_LE(mid.as<ListValue>().items.size(), 16u);
      for (const auto& inner : mid.as<ListValue>().items) {
        ASSERT_LE(inner.as<MapValue>().entries.size(), 4u);
      }
    }
  }
}

TEST_F(GenerateTest, GenerateExamplesCountsAndThreadsState) {
  auto [floats, s1] = generate_examples(reg, "float", 100, RandomState(1));
  ASSERT_EQ(floats.size(), 100u);
  for (const auto& v : floats) EXPECT_TRUE(v.is<FloatValue>());

  auto [mixed, s2] = generate_examples(reg, "intfloatstr", 100, RandomState(1));
  ASSERT_EQ(mixed.size(), 100u);
  for (const auto& v : mixed) {
    EXPECT_TRUE(v.is<BigInt>() || v.is<FloatValue>() || v.is<CodepointString>());
  }

  auto [none, s3] = generate_examples(reg, "int", 0, RandomState(77));
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(s3, RandomState(77));

  // Same seed, same sequence; the tail matches a continued run.
  auto [a, sa] = generate_examples(reg, "list[str]", 10, RandomState(5));
  auto [b, sb] = generate_examples(reg, "list[str]", 5, RandomState(5));
  auto [c, sc] = generate_examples(reg, "list[str]", 5, sb);
  b.insert(b.end(), c.begin(), c.end());
  EXPECT_EQ(a, b);
  EXPECT_EQ(sa, sc);
}

TEST_F(GenerateTest, UnionMembersAreUniform) {
  constexpr int n = 100'000;
  auto [values, _] = generate_examples(reg, "intfloatstr", n, RandomState(6));
  int ints = 0, floats = 0, strs = 0;
  for (const auto& v : values) {
    ints += v.is<BigInt>();
    floats += v.is<FloatValue>();
    strs += v.is<CodepointString>();
  }
  EXPECT_NEAR(ints / double(n), 1.0 / 3, 0.01);
  EXPECT_NEAR(floats / double(n), 1.0 / 3, 0.01);
  EXPECT_NEAR(strs / double(n), 1.0 / 3, 0.01);
}

TEST_F(GenerateTest, WeightedUnion) {
  reg.register_union("mostlyint", {T("int"), T("str")}, {9, 1});
  constexpr int n = 100'000;
  auto [values, _] = generate_examples(reg, "mostlyint", n, RandomState(7));
  int ints = 0;
  for (const auto& v : values) ints += v.is<BigInt>();
  EXPECT_NEAR(ints / double(n), 0.9, 0.01);
}

TEST_F(GenerateTest, UnresolvedTypeThrows) {
  EXPECT_THROW(generate_value(reg, T("nosuch"), RandomState(1)), UnresolvedTypeError);
  EXPECT_THROW(generate_value(reg, T("list[int,int]"), RandomState(1)),
               UnresolvedTypeError);
}

TEST_F(GenerateTest, MembershipBasics) {
  EXPECT_TRUE(is_member(reg, Value(BigInt(0)), T("int")));
  EXPECT_TRUE(is_member(reg, Value(FloatValue::nan()), T("float")));
  EXPECT_FALSE(is_member(reg, Value(BigInt(0)), T("str")));
  EXPECT_TRUE(is_member(reg, Value(BigInt(0)), T("intfloatstr")));
  EXPECT_FALSE(is_member(reg, Value(true), T("intfloatstr")));
  EXPECT_FALSE(is_member(reg, Value(TupleValue{{Value(BigInt(1))}}),
                         T("fixedtuple[int,int]")));
  MapValue dup{{{Value(true), Value(BigInt(1))}, {Value(true), Value(BigInt(2))}}};
  EXPECT_FALSE(is_member(reg, Value(dup), T("dictionary[bool,int]")));
  RecordValue wrong_order{"classtest.testclassa",
                          {{"b", Value(ListValue{})},
                           {"a", Value(FloatValue::neg_zero())}}};
  EXPECT_FALSE(is_member(reg, Value(wrong_order), T("classtest.testclassa")));
  EXPECT_THROW(is_member(reg, Value(BigInt(0)), T("nosuch")), UnresolvedTypeError);
}

TEST_F(GenerateTest, AnonymousUnionGeneration) {
  const auto u = T("list[union[int|nonetype]]");
  ASSERT_TRUE(reg.ensure_anonymous_unions(u));
  RandomState s(8);
  for (int i = 0; i < 200; ++i) {
    auto d = generate_value(reg, u, s);
    s = d.next;
    ASSERT_TRUE(is_member(reg, d.value, u));
  }
}

TEST_F(GenerateTest, MembershipSoundnessProperty) {
  testing::TypeExpressionGen gen(11, testing::default_leaves());
  RandomState s(12);
  for (int i = 0; i < 5'000; ++i) {
    const TypeExpression ty = gen.next(3);
    ASSERT_TRUE(reg.ensure_anonymous_unions(ty)) << ty.to_string();
    auto d = generate_value(reg, ty, s.derive(i));
    ASSERT_TRUE(is_member(reg, d.value, ty)) << ty.to_string();
  }
}

}  // namespace
}  // namespace typeseed
