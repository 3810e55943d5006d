// Copyright 2026 The colexwidth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace colexwidth::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFalse = 1,
  kInputError = 2,
  kResourceError = 3,
  kInternalError = 4,
};

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a, printed as "fnv1a64:<16 hex digits>".
std::uint64_t fnv1a(std::string_view bytes);
std::string digest_string(std::string_view bytes);

}  // namespace colexwidth::cli
