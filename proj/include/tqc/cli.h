// Copyright 2026 The tqc Authors
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

#ifndef TQC_CLI_H
#define TQC_CLI_H

#include <ostream>

#include "tqc/error.h"

namespace tqc {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitIo = 2,
    kExitParse = 3,
    kExitDimension = 4,
    kExitZeroMatrix = 5,
    kExitZeroVector = 6,
    kExitSingular = 7,
    kExitCapExceeded = 8,
    kExitNumerics = 9,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Entry point behind the `tqc` binary. Reports go to `out`, diagnostics to
/// `err`; output files are written only after the command has succeeded.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace tqc

#endif
