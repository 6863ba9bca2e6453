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

#include "typeseed/errors.hpp"
#include "wire_json.hpp"

namespace typeseed {
namespace wire {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json tagged(const char* tag) {
  Json j = Json::object();
  j["t"] = tag;
  return j;
}

Json encode_items(const std::vector<Value>& items) {
  Json arr = Json::array();
  for (const auto& item : items) arr.push_back(to_json(item));
  return arr;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw DecodeError(path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

BigInt decimal(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  BigInt out;
  if (!v.is_string() || !parse_decimal(v.get<std::string>(), out)) {
    fail(path + "." + key, "expected a canonical decimal integer string");
  }
  return out;
}

std::vector<Value> decode_items(const Json& j, const std::string& path) {
  const Json& v = field(j, "v", path);
  if (!v.is_array()) fail(path + ".v", "expected an array");
  std::vector<Value> items;
  items.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    items.push_back(from_json(v[i], path + ".v[" + std::to_string(i) + "]"));
  }
  return items;
}

void expect_keys(const Json& j, std::initializer_list<const char*> allowed,
                 const std::string& path) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(path, "unexpected key \"" + key + "\"");
  }
}

}  // namespace

Json to_json(const Value& v) {
  return std::visit(
      Overloaded{
          [](const BigInt& i) {
            Json j = tagged("int");
            j["v"] = to_decimal(i);
            return j;
          },
          [](const FloatValue& f) {
            Json j = tagged("float");
            switch (f.kind()) {
              case FloatValue::Kind::kRational:
                j["num"] = to_decimal(f.numerator());
                j["den"] = to_decimal(f.denominator());
                break;
              case FloatValue::Kind::kNaN: j["special"] = "nan"; break;
              case FloatValue::Kind::kPosInf: j["special"] = "inf"; break;
              case FloatValue::Kind::kNegInf: j["special"] = "-inf"; break;
              case FloatValue::Kind::kNegZero: j["special"] = "-0"; break;
            }
            return j;
          },
          [](const CodepointString& s) {
            Json j = tagged("str");
            j["v"] = to_utf8(s);
            return j;
          },
          [](const ByteString& b) {
            Json j = tagged("bytes");
            Json arr = Json::array();
            for (auto byte : b) arr.push_back(static_cast<unsigned>(byte));
            j["v"] = std::move(arr);
            return j;
          },
          [](bool b) {
            Json j = tagged("bool");
            j["v"] = b;
            return j;
          },
          [](const NoneValue&) { return tagged("none"); },
          [](const ListValue& l) {
            Json j = tagged("list");
            j["v"] = encode_items(l.items);
            return j;
          },
          [](const TupleValue& t) {
            Json j = tagged("tuple");
            j["v"] = encode_items(t.items);
            return j;
          },
          [](const MapValue& m) {
            Json j = tagged("map");
            Json arr = Json::array();
            for (const auto& e : m.entries) {
              arr.push_back(Json::array({to_json(e.key), to_json(e.value)}));
            }
            j["v"] = std::move(arr);
            return j;
          },
          [](const RecordValue& r) {
            Json j = tagged("record");
            j["class"] = r.class_name;
            Json fields = Json::object();
            for (const auto& f : r.fields) fields[f.name] = to_json(f.value);
            j["fields"] = std::move(fields);
            return j;
          },
      },
      v.data);
}

Value from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const Json& tag = field(j, "t", path);
  if (!tag.is_string()) fail(path + ".t", "expected a string");
  const std::string t = tag.get<std::string>();

  if (t == "int") {
    expect_keys(j, {"t", "v"}, path);
    return decimal(j, "v", path);
  }
  if (t == "float") {
    if (j.contains("special")) {
      expect_keys(j, {"t", "special"}, path);
      const Json& s = j["special"];
      if (!s.is_string()) fail(path + ".special", "expected a string");
      const std::string name = s.get<std::string>();
      if (name == "nan") return FloatValue::nan();
      if (name == "inf") return FloatValue::pos_inf();
      if (name == "-inf") return FloatValue::neg_inf();
      if (name == "-0") return FloatValue::neg_zero();
      fail(path + ".special", "unknown special \"" + name + "\"");
    }
    expect_keys(j, {"t", "num", "den"}, path);
    BigInt num = decimal(j, "num", path);
    BigInt den = decimal(j, "den", path);
    if (den <= 0) fail(path + ".den", "denominator must be positive");
    return FloatValue::ratio(num, den);
  }
  if (t == "str") {
    expect_keys(j, {"t", "v"}, path);
    const Json& v = field(j, "v", path);
    if (!v.is_string()) fail(path + ".v", "expected a string");
    CodepointString s;
    if (!from_utf8(v.get_ref<const std::string&>(), s)) {
      fail(path + ".v", "invalid UTF-8 or surrogate codepoint");
    }
    return s;
  }
  if (t == "bytes") {
    expect_keys(j, {"t", "v"}, path);
    const Json& v = field(j, "v", path);
    if (!v.is_array()) fail(path + ".v", "expected an array");
    ByteString b;
    b.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_unsigned() || v[i].get<std::uint64_t>() > 255) {
        fail(path + ".v[" + std::to_string(i) + "]",
             "expected an integer in [0, 255]");
      }
      b.push_back(static_cast<std::uint8_t>(v[i].get<std::uint64_t>()));
    }
    return b;
  }
  if (t == "bool") {
    expect_keys(j, {"t", "v"}, path);
    const Json& v = field(j, "v", path);
    if (!v.is_boolean()) fail(path + ".v", "expected a boolean");
    return v.get<bool>();
  }
  if (t == "none") {
    expect_keys(j, {"t"}, path);
    return NoneValue{};
  }
  if (t == "list") {
    expect_keys(j, {"t", "v"}, path);
    return ListValue{decode_items(j, path)};
  }
  if (t == "tuple") {
    expect_keys(j, {"t", "v"}, path);
    return TupleValue{decode_items(j, path)};
  }
  if (t == "map") {
    expect_keys(j, {"t", "v"}, path);
    const Json& v = field(j, "v", path);
    if (!v.is_array()) fail(path + ".v", "expected an array");
    MapValue m;
    m.entries.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string p = path + ".v[" + std::to_string(i) + "]";
      if (!v[i].is_array() || v[i].size() != 2) {
        fail(p, "expected a [key, value] pair");
      }
      MapEntry e{from_json(v[i][0], p + "[0]"), from_json(v[i][1], p + "[1]")};
      for (const auto& prev : m.entries) {
        if (prev.key == e.key) fail(p + "[0]", "duplicate map key");
      }
      m.entries.push_back(std::move(e));
    }
    return m;
  }
  if (t == "record") {
    expect_keys(j, {"t", "class", "fields"}, path);
    const Json& cls = field(j, "class", path);
    if (!cls.is_string() || cls.get_ref<const std::string&>().empty()) {
      fail(path + ".class", "expected a non-empty string");
    }
    const Json& fields = field(j, "fields", path);
    if (!fields.is_object()) fail(path + ".fields", "expected an object");
    RecordValue r;
    r.class_name = cls.get<std::string>();
    for (const auto& [name, value] : fields.items()) {
      r.fields.push_back({name, from_json(value, path + ".fields." + name)});
    }
    return r;
  }
  fail(path + ".t", "unknown tag \"" + t + "\"");
}

}  // namespace wire

std::string encode_value(const Value& v) { return wire::to_json(v).dump(); }

Value decode_value(std::string_view text) {
  wire::Json j;
  try {
    j = wire::Json::parse(text);
  } catch (const wire::Json::parse_error& e) {
    throw DecodeError(std::string("$: invalid JSON: ") + e.what());
  }
  return wire::from_json(j);
}

}  // namespace typeseed
