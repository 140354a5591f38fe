// Copyright 2026 The derivkey Authors
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


// Command line front end. CliDispatch is the whole program minus process
// setup so tests can drive it with in-memory streams.

#ifndef DERIVKEY_TOOLS_CLI_H_
#define DERIVKEY_TOOLS_CLI_H_

#include <ostream>

namespace derivkey::cli {

// Returns the process exit code: 0 success, 1 usage, 2 parse or input
// error, 3 numeric error, 4 I/O error.
int CliDispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace derivkey::cli

#endif  // DERIVKEY_TOOLS_CLI_H_
