// Copyright 2026 The qmshape Authors
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


#pragma once

#include <ostream>

namespace qmshape::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitConfig = 2;

/// Entry point behind the qmshape executable. Parses arguments, merges the
/// JSON config with flag overrides, runs one subcommand and writes its files.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmshape::cli
