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

#include <algorithm>

#include "typeseed/errors.hpp"

namespace typeseed {
namespace {

class Generator {
 public:
  Generator(const Registry& registry, const TraceSink* trace)
      : registry_(registry), trace_(trace) {}

  Value generate(const TypeExpression& type, RandomState& st,
                 std::size_t depth) {
    if (depth > kMaxGenerationDepth) {
      throw InternalError("generation depth limit exceeded at \"" +
                          type.to_string() + "\"");
    }
    const TypeDescriptor& d = registry_.resolve(type);
    switch (d.rule) {
      case GenerationRule::kInteger:
        return take(enum_int(st, trace_), st);
      case GenerationRule::kFloat:
        return take(enum_float(st, trace_), st);
      case GenerationRule::kBool:
        return take(enum_bool(st), st);
      case GenerationRule::kString:
        return take(enum_string(st, trace_), st);
      case GenerationRule::kNone:
        return take(enum_none(st), st);
      case GenerationRule::kBytes:
        return take(enum_bytes(st, trace_), st);
      case GenerationRule::kList: {
        const std::size_t n = container_length(st);
        ListValue list;
        list.items.reserve(n);
        ++nesting_;
        for (std::size_t i = 0; i < n; ++i) {
          list.items.push_back(generate(type.args[0], st, depth + 1));
        }
        --nesting_;
        return list;
      }
      case GenerationRule::kDictionary:
        return generate_map(type.args[0], type.args[1], st, depth);
      case GenerationRule::kFixedTuple: {
        TupleValue tuple;
        tuple.items.reserve(type.args.size());
        for (const auto& arg : type.args) {
          tuple.items.push_back(generate(arg, st, depth + 1));
        }
        return tuple;
      }
      case GenerationRule::kUnion: {
        std::size_t member;
        if (d.weights.empty()) {
          member = take(next_uniform(st, d.members.size()), st);
        } else {
          member = take(weighted_switch(st, WeightVector(d.weights)), st);
        }
        if (trace_ && *trace_) (*trace_)(d.name, member);
        return generate(d.members[member], st, depth + 1);
      }
      case GenerationRule::kRecord: {
        RecordValue record;
        record.class_name = d.name;
        record.fields.reserve(d.fields.size());
        for (const auto& f : d.fields) {
          record.fields.push_back({f.name, generate(f.type, st, depth + 1)});
        }
        return record;
      }
    }
    throw InternalError("unknown generation rule");
  }

 private:
  template <typename T>
  static T take(Drawn<T> drawn, RandomState& st) {
    st = drawn.next;
    return std::move(drawn.value);
  }

  std::size_t container_length(RandomState& st) {
    return std::min(take(draw_length(st), st), container_length_cap(nesting_));
  }

  Value generate_map(const TypeExpression& key_type,
                     const TypeExpression& value_type, RandomState& st,
                     std::size_t depth) {
    const std::size_t n = container_length(st);
    MapValue map;
    map.entries.reserve(n);
    ++nesting_;
    for (std::size_t i = 0; i < n; ++i) {
      Value key;
      bool fresh = false;
      for (int attempt = 0; attempt <= kKeyRetries && !fresh; ++attempt) {
        key = generate(key_type, st, depth + 1);
        fresh = std::none_of(map.entries.begin(), map.entries.end(),
                             [&](const MapEntry& e) { return e.key == key; });
      }
      if (!fresh) continue;
      Value value = generate(value_type, st, depth + 1);
      map.entries.push_back({std::move(key), std::move(value)});
    }
    --nesting_;
    return map;
  }

  const Registry& registry_;
  const TraceSink* trace_;
  std::size_t nesting_ = 0;  // enclosing lists and dictionaries
};

bool member_of(const Registry& registry, const Value& v,
               const TypeExpression& type) {
  const TypeDescriptor& d = registry.resolve(type);
  switch (d.rule) {
    case GenerationRule::kInteger:
      return v.is<BigInt>();
    case GenerationRule::kFloat:
      if (!v.is<FloatValue>()) return false;
      return !v.as<FloatValue>().is_rational() ||
             v.as<FloatValue>().denominator() > 0;
    case GenerationRule::kBool:
      return v.is<bool>();
    case GenerationRule::kString: {
      if (!v.is<CodepointString>()) return false;
      return std::all_of(v.as<CodepointString>().begin(),
                         v.as<CodepointString>().end(), [](char32_t cp) {
                           return cp <= 0x10FFFF && (cp < 0xD800 || cp > 0xDFFF);
                         });
    }
    case GenerationRule::kNone:
      return v.is<NoneValue>();
    case GenerationRule::kBytes:
      return v.is<ByteString>();
    case GenerationRule::kList: {
      if (!v.is<ListValue>()) return false;
      const auto& items = v.as<ListValue>().items;
      return std::all_of(items.begin(), items.end(), [&](const Value& item) {
        return member_of(registry, item, type.args[0]);
      });
    }
    case GenerationRule::kDictionary: {
      if (!v.is<MapValue>()) return false;
      const auto& entries = v.as<MapValue>().entries;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!member_of(registry, entries[i].key, type.args[0]) ||
            !member_of(registry, entries[i].value, type.args[1])) {
          return false;
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (entries[j].key == entries[i].key) return false;
        }
      }
      return true;
    }
    case GenerationRule::kFixedTuple: {
      if (!v.is<TupleValue>()) return false;
      const auto& items = v.as<TupleValue>().items;
      if (items.size() != type.args.size()) return false;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (!member_of(registry, items[i], type.args[i])) return false;
      }
      return true;
    }
    case GenerationRule::kUnion:
      return std::any_of(d.members.begin(), d.members.end(),
                         [&](const TypeExpression& m) {
                           return member_of(registry, v, m);
                         });
    case GenerationRule::kRecord: {
      if (!v.is<RecordValue>()) return false;
      const auto& record = v.as<RecordValue>();
      if (record.class_name != d.name ||
          record.fields.size() != d.fields.size()) {
        return false;
      }
      for (std::size_t i = 0; i < d.fields.size(); ++i) {
        if (record.fields[i].name != d.fields[i].name ||
            !member_of(registry, record.fields[i].value, d.fields[i].type)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t container_length_cap(std::size_t nesting) noexcept {
  const std::size_t shift = 2 * nesting;
  if (shift >= 64) return kMinContainerLengthCap;
  return std::max(kMinContainerLengthCap, kMaxContainerLength >> shift);
}

Drawn<Value> generate_value(const Registry& registry, const TypeExpression& type,
                            RandomState state, const TraceSink* trace) {
  Generator gen(registry, trace);
  Value v = gen.generate(type, state, 0);
  return {std::move(v), state};
}

Drawn<std::vector<Value>> generate_examples(const Registry& registry,
                                            const TypeExpression& type,
                                            std::size_t count,
                                            RandomState state) {
  registry.resolve(type);
  std::vector<Value> out;
  out.reserve(count);
  Generator gen(registry, nullptr);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(gen.generate(type, state, 0));
  }
  return {std::move(out), state};
}

Drawn<std::vector<Value>> generate_examples(const Registry& registry,
                                            std::string_view type,
                                            std::size_t count,
                                            RandomState state) {
  return generate_examples(registry, parse_type_expression(type), count, state);
}

bool is_member(const Registry& registry, const Value& value,
               const TypeExpression& type) {
  // Resolve up front so an unresolved type is an error, not `false`.
  registry.resolve(type);
  return member_of(registry, value, type);
}

}  // namespace typeseed
