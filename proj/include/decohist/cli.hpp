// Copyright 2026 The decohist Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace decohist::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kBudgetExceeded = 3,
  kNotPreserved = 10,
  kNotDecoherent = 11,
  kRecurrenceNotFound = 12,
  kNoWitness = 13,
  kNotFineGrained = 14,
};

// Runs one command. args excludes the program name. Reports go to out,
// diagnostics to err; "-" as a file name reads from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace decohist::cli
