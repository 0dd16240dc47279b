// Copyright 2026 The Authors.
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

// The splitmat command line, as a library so tests can drive it.

#ifndef SPLITMAT_CLI_H_
#define SPLITMAT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "splitmat/errors.h"
#include "splitmat/matroid.h"

namespace splitmat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;

// 2 for validation, 3 for guards, 4 for certificate failures.
int ExitCodeFor(ErrorClass error_class);

// "d=2 n=6 nonbases=12,34,56" or "d=2 n=4 bases=12,13,14,23,24".
Matroid ParseMatroidLiteral(const std::string& text);
// The shorter of the two literal forms; ties use bases.
std::string FormatMatroidLiteral(const Matroid& m);

// `args` excludes the program name. Returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace splitmat

#endif  // SPLITMAT_CLI_H_
