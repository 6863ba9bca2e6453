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

#ifndef TYPESEED_CLI_HPP_
#define TYPESEED_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace typeseed {

// Environment variable consulted for the default seed.
inline constexpr const char* kSeedEnvVar = "TYPESEED_SEED";

// Command-line driver. `args` excludes the program name.
//
//   gen          --type T [--n N] [--seed S] [--typeinfo F] [--union NAME=T1,T2,...]
//                [--format json|jsonl] [--max-iters K]
//   register     --typeinfo F [--max-iters K]
//   appropriate  --typeinfo F [--max-iters K] [--format json|jsonl]
//   serve        [--port P] [--host H] [--seed S] [--max-examples N]
//
// Returns 0 on success and a nonzero status, with a message on `err`, on any
// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace typeseed

#endif  // TYPESEED_CLI_HPP_
