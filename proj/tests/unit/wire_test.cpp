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

#include "typeseed/wire.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "support/type_gen.hpp"
#include "typeseed/errors.hpp"
#include "typeseed/generate.hpp"

namespace typeseed {
namespace {

TEST(Encode, Examples) {
  EXPECT_EQ(encode_value(FloatValue::nan()), R"({"t":"float","special":"nan"})");
  EXPECT_EQ(encode_value(FloatValue::neg_zero()), R"({"t":"float","special":"-0"})");
  EXPECT_EQ(encode_value(pow2(65)), R"({"t":"int","v":"36893488147419103232"})");
  EXPECT_EQ(encode_value(BigInt(-7)), R"({"t":"int","v":"-7"})");
  EXPECT_EQ(encode_value(NoneValue{}), R"({"t":"none"})");
  EXPECT_EQ(encode_value(true), R"({"t":"bool","v":true})");
  EXPECT_EQ(encode_value(ByteString{0, 255}), R"({"t":"bytes","v":[0,255]})");
  EXPECT_EQ(encode_value(CodepointString(U"λ\U0001F600")),
            "{\"t\":\"str\",\"v\":\"\xce\xbb\xf0\x9f\x98\x80\"}");
  EXPECT_EQ(encode_value(FloatValue::ratio(-6, 4)),
            R"({"t":"float","num":"-3","den":"2"})");
  EXPECT_EQ(encode_value(MapValue{{{Value(true), Value(NoneValue{})}}}),
            R"({"t":"map","v":[[{"t":"bool","v":true},{"t":"none"}]]})");
  EXPECT_EQ(encode_value(TupleValue{{Value(BigInt(0))}}),
            R"({"t":"tuple","v":[{"t":"int","v":"0"}]})");
}

TEST(Encode, Record) {
  RecordValue r{"classtest.testclassa",
                {{"a", Value(FloatValue::ratio(3, 2))},
                 {"b", Value(ListValue{{Value(BigInt(1))}})}}};
  EXPECT_EQ(encode_value(r),
            R"({"t":"record","class":"classtest.testclassa","fields":{"a":{"t":"float","num":"3","den":"2"},"b":{"t":"list","v":[{"t":"int","v":"1"}]}}})");
}

TEST(Decode, Basics) {
  EXPECT_EQ(decode_value(R"({"t":"none"})"), Value(NoneValue{}));
  EXPECT_EQ(decode_value(R"({"t":"float","num":"6","den":"4"})"),
            Value(FloatValue::ratio(3, 2)));
  EXPECT_EQ(decode_value(R"({"t":"float","special":"inf"})"),
            Value(FloatValue::pos_inf()));
}

TEST(Decode, Errors) {
  for (const char* bad : {
           R"({"t":"float","num":"1","den":"0"})",
           R"({"t":"float","num":"1","den":"-2"})",
           R"({"t":"float","special":"NaN"})",
           R"({"t":"int","v":"01"})",
           R"({"t":"int","v":"-0"})",
           R"({"t":"int","v":5})",
           R"({"t":"int","v":"5","x":1})",
           R"({"t":"bytes","v":[256]})",
           R"({"t":"bytes","v":[-1]})",
           R"({"t":"str","v":"\ud800"})",
           R"({"t":"map","v":[[{"t":"none"},{"t":"none"}],[{"t":"none"},{"t":"none"}]]})",
           R"({"t":"map","v":[[{"t":"none"}]]})",
           R"({"t":"record","class":"c","fields":[]})",
           R"({"t":"what"})",
           R"({"v":"1"})",
           R"([])",
           R"(not json)",
       }) {
    EXPECT_THROW(decode_value(bad), DecodeError) << bad;
  }
}

TEST(Decode, ErrorNamesPath) {
  try {
    decode_value(R"({"t":"list","v":[{"t":"none"},{"t":"float","num":"1","den":"0"}]})");
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_NE(std::string(e.what()).find("$.v[1]"), std::string::npos) << e.what();
  }
}

TEST(RoundTrip, SpecialsAndWideIntegers) {
  for (const Value& v : {Value(FloatValue::nan()), Value(FloatValue::neg_zero()),
                         Value(FloatValue::pos_inf()), Value(FloatValue::neg_inf()),
                         Value(BigInt(pow2(64) + 1)), Value(BigInt(-pow2(65) - 1)),
                         Value(FloatValue(pow2_rational(-1074)))}) {
    const std::string text = encode_value(v);
    EXPECT_EQ(decode_value(text), v) << text;
    EXPECT_EQ(encode_value(decode_value(text)), text);
  }
}

TEST(RoundTrip, GeneratedValuesProperty) {
  Registry reg = Registry::with_base_types();
  reg.register_record("rec", {{"x", parse_type_expression("float")},
                              {"y", parse_type_expression("list[bytes]")}});
  std::vector<std::string> leaves = testing::default_leaves();
  leaves.erase(std::remove_if(leaves.begin(), leaves.end(),
                              [](const std::string& s) {
                                return s.starts_with("classtest") || s == "intfloatstr";
                              }),
               leaves.end());
  leaves.push_back("rec");
  testing::TypeExpressionGen gen(21, leaves);
  RandomState s(22);
  for (int i = 0; i < 5'000; ++i) {
    const TypeExpression ty = gen.next(2);
    reg.ensure_anonymous_unions(ty);
    auto d = generate_value(reg, ty, s);
    s = d.next;
    const std::string text = encode_value(d.value);
    ASSERT_EQ(decode_value(text), d.value) << text;
  }
}

}  // namespace
}  // namespace typeseed
