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

#include "typeseed/type_expr.hpp"

#include <algorithm>

#include "typeseed/errors.hpp"

namespace typeseed {
namespace {

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == '-';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TypeExpression parse() {
    TypeExpression expr = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return expr;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("type expression \"" + std::string(text_) + "\": " +
                          what + " at position " + std::to_string(pos_),
                      pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string parse_name() {
    skip_space();
    std::string name;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (!is_name_char(c)) break;
      name.push_back(c);
      ++pos_;
    }
    if (name.empty()) fail("expected a type name");
    return name;
  }

  TypeExpression parse_expr() {
    TypeExpression expr;
    expr.head = parse_name();
    if (!accept('[')) return expr;
    const bool is_union = expr.head == kUnionHead;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ']') {
      fail("empty argument list");
    }
    expr.args.push_back(parse_expr());
    for (;;) {
      if (accept(']')) break;
      skip_space();
      if (pos_ >= text_.size()) fail("unterminated argument list");
      const char sep = text_[pos_];
      if (sep == ',' || (sep == '|' && is_union)) {
        ++pos_;
        expr.args.push_back(parse_expr());
        continue;
      }
      fail(std::string("unexpected '") + sep + "'");
    }
    if (is_union) return make_union_expression(std::move(expr.args));
    return expr;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_text(const TypeExpression& e, std::string& out) {
  out += e.head;
  if (e.args.empty()) return;
  const char sep = e.is_anonymous_union() ? '|' : ',';
  out.push_back('[');
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i > 0) out.push_back(sep);
    append_text(e.args[i], out);
  }
  out.push_back(']');
}

}  // namespace

std::string TypeExpression::to_string() const {
  std::string out;
  append_text(*this, out);
  return out;
}

bool operator==(const TypeExpression& a, const TypeExpression& b) {
  return a.head == b.head && a.args == b.args;
}

std::strong_ordering operator<=>(const TypeExpression& a,
                                 const TypeExpression& b) {
  if (auto c = a.head <=> b.head; c != 0) return c;
  const std::size_t n = std::min(a.args.size(), b.args.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.args[i] <=> b.args[i]; c != 0) return c;
  }
  return a.args.size() <=> b.args.size();
}

TypeExpression parse_type_expression(std::string_view text) {
  return Parser(text).parse();
}

TypeExpression make_union_expression(std::vector<TypeExpression> members) {
  // Nested anonymous unions flatten into their parent.
  std::vector<TypeExpression> flat;
  for (auto& m : members) {
    if (m.is_anonymous_union()) {
      for (auto& inner : m.args) flat.push_back(std::move(inner));
    } else {
      flat.push_back(std::move(m));
    }
  }
  std::sort(flat.begin(), flat.end(),
            [](const TypeExpression& a, const TypeExpression& b) {
              return a.to_string() < b.to_string();
            });
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.size() == 1) return std::move(flat.front());
  return TypeExpression{std::string(kUnionHead), std::move(flat)};
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace typeseed
