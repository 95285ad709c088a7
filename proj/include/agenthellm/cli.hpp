/*
 * Copyright (C) 2026 The agenthellm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/


#ifndef AGENTHELLM__CLI_HPP
#define AGENTHELLM__CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace agenthellm::cli {

enum ExitCode : int
{
  kOk = 0,
  kNoPath = 1,
  kInvalid = 2,
  kUsage = 3,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace agenthellm::cli

#endif // AGENTHELLM__CLI_HPP
