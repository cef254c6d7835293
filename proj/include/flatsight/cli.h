// Copyright 2026 The flatsight Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLATSIGHT_CLI_H_
#define FLATSIGHT_CLI_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "flatsight/error.h"

namespace flatsight {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitArgument = 2,
  kExitConvexity = 3,
  kExitParity = 4,
  kExitNumeric = 5,
};

int exit_code_for(ErrorKind kind);

// Accepts decimal radians ("1.0") or rational multiples of pi ("2/3 pi",
// "pi/6", "3pi/8", "pi"). Error(kParse) otherwise.
double parse_angle(std::string_view text);

// Runs one command line; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace flatsight

#endif  // FLATSIGHT_CLI_H_
