// Copyright 2026 <authors>
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

#include <string>
#include <vector>

#include "gth/common.hpp"

namespace gth {

struct CommandRequest {
  std::string verb;  // classify, h2, subgroups, factorizations, hopf, rack, verify-paper
  std::vector<std::string> args;
  bool json = false, markdown = false, all = false, stamp = false;
  std::vector<std::string> only;
  int threads = 0;  // 0 keeps the GTH_THREADS default
};

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 verification mismatch
  std::string out;
};

// Errors surface as gth::Error; exit_code_for maps them to process status.
CommandResult run_command(const CommandRequest& req);
int exit_code_for(ErrorKind kind);
const std::vector<std::string>& command_verbs();

}  // namespace gth
