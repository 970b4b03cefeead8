// Copyright 2026 The aucteq Authors.
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

#ifndef AUCTEQ_TOOLS_CLI_HPP_
#define AUCTEQ_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace aucteq {

// Parses and runs one command line (without the program name). Results go
// to `out` as JSON (the report subcommand prints its pass/fail table as
// text); diagnostics go to `err`. Exit code: 0 on success/pass, 1 on a
// verification or acceptance failure, 2 on invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace aucteq

#endif  // AUCTEQ_TOOLS_CLI_HPP_
