// Copyright 2026 The pauliprobe Authors
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


#ifndef PAULIPROBE_TOOLS_CLI_H
#define PAULIPROBE_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace pauliprobe::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitRuntime = 2,
    kExitPartial = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and usage to `err`.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses "0.25", "1e-3" or a fraction "1/3".
double parse_real(const std::string &text);

}  // namespace pauliprobe::cli

#endif
