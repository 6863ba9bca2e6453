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

#ifndef TYPESEED_TESTS_SUPPORT_TYPE_GEN_HPP_
#define TYPESEED_TESTS_SUPPORT_TYPE_GEN_HPP_

#include <random>
#include <string>
#include <vector>

#include "typeseed/type_expr.hpp"

namespace typeseed::testing {

// Random type expressions over a fixed vocabulary, nesting depth <= max_depth
// (a bare leaf has depth 0). Driven by a std::mt19937_64 so the corpus is
// independent of the library's own generator.
class TypeExpressionGen {
 public:
  TypeExpressionGen(std::uint64_t seed, std::vector<std::string> leaves)
      : rng_(seed), leaves_(std::move(leaves)) {}

  TypeExpression next(int max_depth) {
    std::uniform_int_distribution<int> pick(0, max_depth > 0 ? 5 : 0);
    switch (pick(rng_)) {
      case 2:
        return {"list", {next(max_depth - 1)}};
      case 3:
        return {"dictionary", {next(max_depth - 1), next(max_depth - 1)}};
      case 4: {
        std::uniform_int_distribution<int> arity(1, 3);
        TypeExpression t{"fixedtuple", {}};
        for (int i = arity(rng_); i > 0; --i) t.args.push_back(next(max_depth - 1));
        return t;
      }
      case 5:
        return make_union_expression({next(max_depth - 1), next(max_depth - 1)});
      default: {
        std::uniform_int_distribution<std::size_t> leaf(0, leaves_.size() - 1);
        return parse_type_expression(leaves_[leaf(rng_)]);
      }
    }
  }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> leaves_;
};

inline std::vector<std::string> default_leaves() {
  return {"int",     "integer", "float",  "str",      "unicode",
          "bytes",   "bool",    "boolean", "nonetype", "intfloatstr",
          "classtest.testclassa", "classtest.testclassb"};
}

}  // namespace typeseed::testing

#endif  // TYPESEED_TESTS_SUPPORT_TYPE_GEN_HPP_
