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

#ifndef TYPESEED_VALUE_HPP_
#define TYPESEED_VALUE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "typeseed/numeric.hpp"

namespace typeseed {

// Python float modelled as exact rationals plus the IEEE-754 specials that
// are not rationals (or, for -0, not distinguishable as one).
class FloatValue {
 public:
  enum class Kind : std::uint8_t { kRational, kNaN, kPosInf, kNegInf, kNegZero };

  FloatValue() = default;
  explicit FloatValue(Rational value)
      : kind_(Kind::kRational), value_(std::move(value)) {}

  // Throws PreconditionError when den == 0. Result is in lowest terms with
  // the sign on the numerator.
  static FloatValue ratio(const BigInt& num, const BigInt& den);
  static FloatValue nan() { return FloatValue(Kind::kNaN); }
  static FloatValue pos_inf() { return FloatValue(Kind::kPosInf); }
  static FloatValue neg_inf() { return FloatValue(Kind::kNegInf); }
  static FloatValue neg_zero() { return FloatValue(Kind::kNegZero); }

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::kRational; }
  // Only meaningful when is_rational().
  const Rational& rational() const noexcept { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  friend bool operator==(const FloatValue& a, const FloatValue& b) {
    return a.kind_ == b.kind_ && (!a.is_rational() || a.value_ == b.value_);
  }

 private:
  explicit FloatValue(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kRational;
  Rational value_ = 0;
};

// Unicode scalar values; never contains surrogates.
using CodepointString = std::u32string;
using ByteString = std::vector<std::uint8_t>;

struct Value;
struct MapEntry;
struct RecordField;

struct NoneValue {
  friend bool operator==(NoneValue, NoneValue) { return true; }
};
struct ListValue {
  std::vector<Value> items;
  friend bool operator==(const ListValue&, const ListValue&);
};
struct TupleValue {
  std::vector<Value> items;
  friend bool operator==(const TupleValue&, const TupleValue&);
};
struct MapValue {
  std::vector<MapEntry> entries;
  friend bool operator==(const MapValue&, const MapValue&);
};
struct RecordValue {
  std::string class_name;
  std::vector<RecordField> fields;
  friend bool operator==(const RecordValue&, const RecordValue&);
};

// Tagged value tree produced by the generators.
struct Value {
  using Variant = std::variant<BigInt, FloatValue, CodepointString, ByteString,
                               bool, NoneValue, ListValue, TupleValue,
                               MapValue, RecordValue>;
  Variant data;

  Value() : data(NoneValue{}) {}
  template <typename T>
    requires std::is_constructible_v<Variant, T&&> &&
             (!std::is_same_v<std::remove_cvref_t<T>, Value>)
  Value(T&& v) : data(std::forward<T>(v)) {}  // NOLINT(google-explicit-constructor)

  template <typename T>
  bool is() const noexcept {
    return std::holds_alternative<T>(data);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(data);
  }

  friend bool operator==(const Value& a, const Value& b) {
    return a.data == b.data;
  }
};

struct MapEntry {
  Value key;
  Value value;
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

struct RecordField {
  std::string name;
  Value value;
  friend bool operator==(const RecordField&, const RecordField&) = default;
};

inline bool operator==(const ListValue& a, const ListValue& b) {
  return a.items == b.items;
}
inline bool operator==(const TupleValue& a, const TupleValue& b) {
  return a.items == b.items;
}
inline bool operator==(const MapValue& a, const MapValue& b) {
  return a.entries == b.entries;
}
inline bool operator==(const RecordValue& a, const RecordValue& b) {
  return a.class_name == b.class_name && a.fields == b.fields;
}

// Short tag of the value's variant: "int", "float", "str", ... as used on
// the wire.
std::string_view value_tag(const Value& v) noexcept;

// UTF-8 encode; input must be valid scalar values.
std::string to_utf8(const CodepointString& s);
// Strict UTF-8 decode; returns false on malformed input or surrogates.
bool from_utf8(std::string_view bytes, CodepointString& out);

}  // namespace typeseed

#endif  // TYPESEED_VALUE_HPP_
