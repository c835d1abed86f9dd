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

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

namespace qmshape::cli {

/// "%.17g"; NaN and infinities as "nan", "inf", "-inf".
std::string format_number(double x);

/// Pretty JSON with two-space indent where every floating-point value goes
/// through format_number (non-finite values become null).
std::string dump_json(const nlohmann::json& value);

/// Header row plus one row per index of equally long columns.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<Eigen::VectorXd>& columns);

struct OutputFile {
  std::string name;
  std::string content;
};

using OutputBundle = std::vector<OutputFile>;

/// Writes every file into `dir` (created if needed) through a temporary name
/// and renames afterwards; on failure the files of this bundle are removed.
/// Throws std::filesystem::filesystem_error or std::runtime_error.
void write_bundle(const std::filesystem::path& dir, const OutputBundle& bundle);

}  // namespace qmshape::cli
