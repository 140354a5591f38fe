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

#ifndef DERIVKEY_IO_H_
#define DERIVKEY_IO_H_

#include <string>
#include <string_view>

namespace derivkey {

// Both throw Error(kIo) naming the path on failure.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

// Shortest decimal text that parses back to exactly `value`.
std::string FormatDouble(double value);

}  // namespace derivkey

#endif  // DERIVKEY_IO_H_
