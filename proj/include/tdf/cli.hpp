// Copyright 2026 The tdesign-forge Authors
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

#pragma once

#include <string>
#include <vector>

namespace tdf::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFailed = 2;   // a verification ran and did not pass
inline constexpr int kExitUsage = 64;

// Environment variable read for the default --threads value.
inline constexpr const char* kThreadsEnv = "TDESIGN_THREADS";

int run(int argc, const char* const* argv);
/// args excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace tdf::cli
